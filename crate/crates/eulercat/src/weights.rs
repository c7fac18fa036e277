//! The Euler measure χ(𝒜) = 1ᵀ[𝒜]⁺1 and its weighting/coweighting analysis.
//!
//! Weighting existence is decided by the pseudoinverse criterion: `M⁺1` is a
//! weighting iff any weighting exists, so one candidate and one exact check
//! settle the question. The classical weighting-based Euler characteristic is
//! defined (and agrees with χ) exactly when both a weighting and a
//! coweighting exist; `lein_defined` reports that case.

use serde::ser::SerializeStruct;
use thiserror::Error;

use crate::catcore::{check_adjunction_matrices, CatError, FinCategory, FunctorData};
use crate::ratmat::{RatMatrix, Rational};

#[derive(Debug, Error, Clone)]
pub enum WeightError {
    #[error(transparent)]
    Cat(#[from] CatError),
    #[error("matrix has no weighting")]
    MissingWeighting,
    #[error("matrix has no coweighting")]
    MissingCoweighting,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
}

/// χ plus (co)weighting existence data for one category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiReport {
    pub chi: Rational,
    pub has_weighting: bool,
    pub has_coweighting: bool,
    /// n x 1, present iff `has_weighting`
    pub weighting: Option<RatMatrix>,
    /// 1 x n, present iff `has_coweighting`
    pub coweighting: Option<RatMatrix>,
    /// χ_Lein is defined (and equals `chi`) iff both exist.
    pub lein_defined: bool,
}

impl serde::Serialize for ChiReport {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let fracs = |m: &RatMatrix| -> Vec<String> {
            m.entries().iter().map(crate::io::rational_to_string).collect()
        };
        let mut s = serializer.serialize_struct("ChiReport", 6)?;
        s.serialize_field("chi", &crate::io::rational_to_string(&self.chi))?;
        s.serialize_field("has_weighting", &self.has_weighting)?;
        s.serialize_field("has_coweighting", &self.has_coweighting)?;
        s.serialize_field("weighting", &self.weighting.as_ref().map(fracs))?;
        s.serialize_field("coweighting", &self.coweighting.as_ref().map(fracs))?;
        s.serialize_field("lein_defined", &self.lein_defined)?;
        s.end()
    }
}

/// `1ᵀ M⁺ 1` of a square matrix, as a scalar.
pub fn chi_of_matrix(m: &RatMatrix) -> Result<Rational, crate::ratmat::MatError> {
    let p = m.pinv()?;
    let ones = RatMatrix::ones(m.rows());
    let scalar = ones.transpose().mat_mul(&p)?.mat_mul(&ones)?;
    Ok(scalar.entry_sum())
}

/// The Euler measure χ(𝒜) = 1ᵀ[𝒜]⁺1.
pub fn chi(c: &FinCategory) -> Result<Rational, CatError> {
    let adj = c.adjacency()?;
    Ok(chi_of_matrix(&adj).expect("adjacency is square"))
}

/// The candidate `M⁺1`, returned iff it is a weighting (`Mw = 1` exactly).
pub fn weighting(m: &RatMatrix) -> Option<RatMatrix> {
    let w = m.pinv().ok()?.mat_mul(&RatMatrix::ones(m.rows())).ok()?;
    if m.mat_mul(&w).unwrap() == RatMatrix::ones(m.rows()) {
        Some(w)
    } else {
        None
    }
}

/// The candidate `1ᵀM⁺`, returned iff it is a coweighting (`vM = 1ᵀ` exactly).
pub fn coweighting(m: &RatMatrix) -> Option<RatMatrix> {
    let ones_t = RatMatrix::ones(m.rows()).transpose();
    let v = ones_t.mat_mul(&m.pinv().ok()?).ok()?;
    if v.mat_mul(m).unwrap() == ones_t {
        Some(v)
    } else {
        None
    }
}

pub fn chi_report(c: &FinCategory) -> Result<ChiReport, CatError> {
    let adj = c.adjacency()?;
    let w = weighting(&adj);
    let v = coweighting(&adj);
    Ok(ChiReport {
        chi: chi_of_matrix(&adj).expect("adjacency is square"),
        has_weighting: w.is_some(),
        has_coweighting: v.is_some(),
        lein_defined: w.is_some() && v.is_some(),
        weighting: w,
        coweighting: v,
    })
}

/// Checks `sum(w) = sum(v) = 1ᵀM⁺1` for a matrix with both a weighting and
/// a coweighting.
pub fn check_sls(m: &RatMatrix) -> Result<bool, WeightError> {
    let w = weighting(m).ok_or(WeightError::MissingWeighting)?;
    let v = coweighting(m).ok_or(WeightError::MissingCoweighting)?;
    let chi = chi_of_matrix(m).expect("weighting implies square");
    Ok(w.entry_sum() == chi && v.entry_sum() == chi)
}

/// Theorem-verification harness for χ-invariance under adjunctions
/// `L : 𝒜 ⇄ ℬ : R`. Preconditions: the matrix adjunction identity holds,
/// `[𝒜]` has a coweighting and `[ℬ]` has a weighting. Returns true iff
/// χ(𝒜) = χ(ℬ), `[ℬ]` gains a coweighting and `[𝒜]` gains a weighting.
pub fn chi_adjunction_transport(
    a: &FinCategory,
    b: &FinCategory,
    l: &FunctorData,
    r: &FunctorData,
) -> Result<bool, WeightError> {
    if !check_adjunction_matrices(a, b, l, r)? {
        return Err(WeightError::PreconditionFailed(
            "[A][R] != [L]ᵀ[B]: functors fail the adjunction matrix identity".into(),
        ));
    }
    let adj_a = a.adjacency()?;
    let adj_b = b.adjacency()?;
    if coweighting(&adj_a).is_none() {
        return Err(WeightError::PreconditionFailed(
            "[A] has no coweighting".into(),
        ));
    }
    if weighting(&adj_b).is_none() {
        return Err(WeightError::PreconditionFailed("[B] has no weighting".into()));
    }
    Ok(chi(a)? == chi(b)?
        && coweighting(&adj_b).is_some()
        && weighting(&adj_a).is_some())
}
