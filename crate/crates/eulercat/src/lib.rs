//! Exact computation of the Euler measure χ(𝒜) = 1ᵀ[𝒜]⁺1 of finite
//! categories, where [𝒜]⁺ is the Moore-Penrose pseudoinverse of the
//! adjacency matrix over the rationals.
//!
//! - [`ratmat`]: exact rational dense linear algebra, including the
//!   pseudoinverse computed from row-space and `Null(Mᵀ)` bases.
//! - [`catcore`]: finite categories as explicit data with axiom validation.
//! - [`weights`]: χ, weightings/coweightings, and the compatibility report
//!   with the classical weighting-based Euler characteristic.
//! - [`constructions`]: products, disjoint unions, posets, and the
//!   Grothendieck construction with the χ inclusion-exclusion formula.
//! - [`standard`], [`gen`], [`laws`], [`io`]: stock categories, seeded
//!   random instances, law-verification suites, and JSON file formats.

pub mod catcore;
pub mod constructions;
pub mod gen;
pub mod io;
pub mod laws;
pub mod ratmat;
pub mod standard;
pub mod weights;

pub use catcore::{FinCategory, FunctorData};
pub use ratmat::{RatMatrix, Rational};
pub use weights::ChiReport;
