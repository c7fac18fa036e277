//! JSON file formats: matrices with exact fraction entries, categories with
//! explicit composition tables, functors, and diagrams. No floating point
//! anywhere; fractions travel as integers or `"p/q"` strings.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_traits::One;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::catcore::{FinCategory, FunctorData, Morphism};
use crate::constructions::Diagram;
use crate::ratmat::{RatMatrix, Rational};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("invalid JSON in {path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("{0}")]
    Format(String),
}

/// `"5/13"`, or just the numerator when the value is an integer.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_from_str(s: &str) -> Result<Rational, IoError> {
    Rational::from_str(s.trim())
        .map_err(|e| IoError::Format(format!("bad rational {s:?}: {e}")))
}

fn rational_from_value(v: &Value) -> Result<Rational, IoError> {
    match v {
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| IoError::Format(format!("entry {n} is not an exact integer")))?;
            Ok(crate::ratmat::rat(i, 1))
        }
        Value::String(s) => rational_from_str(s),
        other => Err(IoError::Format(format!(
            "matrix entry must be an integer or \"p/q\" string, got {other}"
        ))),
    }
}

fn rational_to_value(r: &Rational) -> Value {
    if r.denom().is_one() {
        if let Ok(i) = i64::try_from(r.numer().clone()) {
            return Value::from(i);
        }
    }
    Value::from(rational_to_string(r))
}

#[derive(Serialize, Deserialize)]
struct MatrixFile {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Value>>,
}

pub fn matrix_from_json(v: &Value) -> Result<RatMatrix, IoError> {
    let file: MatrixFile = serde_json::from_value(v.clone())
        .map_err(|e| IoError::Format(format!("bad matrix object: {e}")))?;
    if file.entries.len() != file.rows {
        return Err(IoError::Format(format!(
            "expected {} rows, found {}",
            file.rows,
            file.entries.len()
        )));
    }
    let mut entries = Vec::with_capacity(file.rows * file.cols);
    for (i, row) in file.entries.iter().enumerate() {
        if row.len() != file.cols {
            return Err(IoError::Format(format!(
                "row {i} has {} entries, expected {}",
                row.len(),
                file.cols
            )));
        }
        for e in row {
            entries.push(rational_from_value(e)?);
        }
    }
    Ok(RatMatrix::from_entries(file.rows, file.cols, entries))
}

pub fn matrix_to_json(m: &RatMatrix) -> Value {
    let entries: Vec<Vec<Value>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| rational_to_value(m.get(i, j))).collect())
        .collect();
    serde_json::json!({ "rows": m.rows(), "cols": m.cols(), "entries": entries })
}

#[derive(Serialize, Deserialize)]
struct CategoryFile {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: BTreeMap<String, String>,
    composition: Vec<[String; 3]>,
}

pub fn category_from_json(v: &Value) -> Result<FinCategory, IoError> {
    let file: CategoryFile = serde_json::from_value(v.clone())
        .map_err(|e| IoError::Format(format!("bad category object: {e}")))?;
    let mut composition = BTreeMap::new();
    for [g, f, gf] in file.composition {
        if composition.insert((g.clone(), f.clone()), gf).is_some() {
            return Err(IoError::Format(format!(
                "duplicate composition entry for ({g:?},{f:?})"
            )));
        }
    }
    Ok(FinCategory {
        objects: file.objects,
        morphisms: file.morphisms,
        identities: file.identities,
        composition,
    })
}

pub fn category_to_json(c: &FinCategory) -> Value {
    let composition: Vec<[&String; 3]> = c
        .composition
        .iter()
        .map(|((g, f), gf)| [g, f, gf])
        .collect();
    serde_json::json!({
        "objects": c.objects,
        "morphisms": c.morphisms,
        "identities": c.identities,
        "composition": composition,
    })
}

/// Functor file: paths to the source and target category files plus the maps.
#[derive(Serialize, Deserialize)]
pub struct FunctorFile {
    pub source: String,
    pub target: String,
    pub objects: BTreeMap<String, String>,
    pub morphisms: BTreeMap<String, String>,
}

/// Diagram file: path to the index category, fiber paths per index object,
/// and arrow maps per index morphism. Arrows for identity morphisms may be
/// omitted; they are filled in as identity functors.
#[derive(Serialize, Deserialize)]
pub struct DiagramFile {
    pub index: String,
    pub fibers: BTreeMap<String, String>,
    pub arrows: BTreeMap<String, FunctorData>,
}

fn read_json(path: &Path) -> Result<Value, IoError> {
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| IoError::Json {
        path: path.to_path_buf(),
        source,
    })
}

fn sibling(base: &Path, rel: &str) -> PathBuf {
    base.parent().unwrap_or_else(|| Path::new(".")).join(rel)
}

pub fn load_matrix(path: &Path) -> Result<RatMatrix, IoError> {
    matrix_from_json(&read_json(path)?)
}

pub fn load_category(path: &Path) -> Result<FinCategory, IoError> {
    category_from_json(&read_json(path)?)
}

/// Loads a functor file and its source/target categories (paths resolved
/// relative to the functor file).
pub fn load_functor(path: &Path) -> Result<(FinCategory, FinCategory, FunctorData), IoError> {
    let file: FunctorFile = serde_json::from_value(read_json(path)?)
        .map_err(|e| IoError::Format(format!("bad functor file: {e}")))?;
    let source = load_category(&sibling(path, &file.source))?;
    let target = load_category(&sibling(path, &file.target))?;
    Ok((
        source,
        target,
        FunctorData {
            object_map: file.objects,
            morphism_map: file.morphisms,
        },
    ))
}

pub fn load_diagram(path: &Path) -> Result<Diagram, IoError> {
    let file: DiagramFile = serde_json::from_value(read_json(path)?)
        .map_err(|e| IoError::Format(format!("bad diagram file: {e}")))?;
    let index = load_category(&sibling(path, &file.index))?;
    let mut fibers = BTreeMap::new();
    for (obj, rel) in &file.fibers {
        fibers.insert(obj.clone(), load_category(&sibling(path, rel))?);
    }
    let mut arrows = file.arrows;
    for (obj, id) in &index.identities {
        if !arrows.contains_key(id) {
            if let Some(fiber) = fibers.get(obj) {
                arrows.insert(id.clone(), FunctorData::identity(fiber));
            }
        }
    }
    Ok(Diagram {
        index,
        fibers,
        arrows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratmat::rat;

    #[test]
    fn matrix_round_trip_with_fractions() {
        let m = RatMatrix::from_rows(vec![
            vec![rat(3, 26), rat(3, 26)],
            vec![rat(1, 13), rat(-2, 1)],
        ]);
        let json = matrix_to_json(&m);
        assert_eq!(json["entries"][0][0], Value::from("3/26"));
        assert_eq!(json["entries"][1][1], Value::from(-2));
        assert_eq!(matrix_from_json(&json).unwrap(), m);
    }

    #[test]
    fn matrix_rejects_floats() {
        let v = serde_json::json!({"rows":1,"cols":1,"entries":[[0.5]]});
        assert!(matrix_from_json(&v).is_err());
    }

    #[test]
    fn matrix_rejects_shape_mismatch() {
        let v = serde_json::json!({"rows":2,"cols":1,"entries":[[1]]});
        assert!(matrix_from_json(&v).is_err());
    }

    #[test]
    fn category_round_trip() {
        let c = crate::standard::poset_span();
        let json = category_to_json(&c);
        let back = category_from_json(&json).unwrap();
        assert_eq!(back, c);
        assert!(back.validate().is_valid());
    }

    #[test]
    fn rational_string_forms() {
        assert_eq!(rational_to_string(&rat(5, 13)), "5/13");
        assert_eq!(rational_to_string(&rat(3, 1)), "3");
        assert_eq!(rational_from_str("-2/4").unwrap(), rat(-1, 2));
        assert_eq!(rational_from_str("7").unwrap(), rat(7, 1));
    }
}
