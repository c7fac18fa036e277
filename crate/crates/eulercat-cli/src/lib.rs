//! Bundled-corpus plumbing: the manifest entry record and path helpers.
//! The binary lives in `main.rs`; this small library is shared with the
//! integration tests that pin the corpus down.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One record of `corpus/manifest.json`. `expected` maps check names to the
/// exact values the entry must reproduce (fraction strings or booleans).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub kind: CorpusKind,
    pub path: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub expected: BTreeMap<String, Value>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CorpusKind {
    Matrix,
    Category,
    FunctorPair,
    Diagram,
}

/// A functor-pair file: sibling-relative paths to the left and right functor
/// files of a candidate adjunction.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FunctorPairFile {
    pub left: String,
    pub right: String,
}

/// Repository-root `corpus/` directory.
pub fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

pub fn manifest_path() -> PathBuf {
    corpus_dir().join("manifest.json")
}

pub fn load_manifest() -> Vec<CorpusEntry> {
    let text = std::fs::read_to_string(manifest_path()).expect("corpus manifest missing");
    serde_json::from_str(&text).expect("corpus manifest malformed")
}
