//! Exact arithmetic substrate: arbitrary-precision integer and rational
//! matrices, Laurent polynomials, and the core linear-algebra routines
//! (fraction-free determinants, exact inertia, GF(2) symplectic
//! decomposition, Smith normal form over the rational Laurent ring).
//!
//! Everything here is pure and deterministic: values are immutable after
//! construction, no floating point is used anywhere, and same inputs always
//! produce bit-identical outputs.

pub mod gf2;
pub mod inertia;
pub mod laurent;
pub mod matrix;
pub mod rng;
pub mod smith;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactAlgError {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric: {0}")]
    NotSymmetric(String),
}

pub use gf2::{gf2_radical, symplectic_decompose, GF2Matrix, GF2Vec, SymplecticDecomposition};
pub use inertia::{inertia, Inertia};
pub use laurent::LaurentPoly;
pub use matrix::{det_int, det_laurent, random_unimodular, IntMatrix, PolyMatrix};
pub use rng::{derive_seed, SplitMix64};
pub use smith::smith_laurent;
