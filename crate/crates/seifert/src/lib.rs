//! Seifert forms and their invariants: signature, Arf, Alexander polynomial
//! and module, Conway polynomial. A form is a square integer matrix `A`
//! together with a sign `epsilon` and a kind tag; its intersection pairing is
//! `Q = A - epsilon * A^T`. All computations are exact.

use thiserror::Error;

pub mod alexander;
pub mod conway;
pub mod form;
pub mod quadratic;

pub use alexander::{alexander, alexander_module};
pub use conway::{conway, ConwayData};
pub use form::{signature, validate, Diagnostics, Epsilon, FormKind, SeifertForm};
pub use quadratic::{arf, Arf, GF2QuadraticSpace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SeifertError {
    #[error("operation requires a {expected} form, got {got}")]
    KindMismatch { expected: FormKind, got: FormKind },
    #[error("operation requires epsilon +1, form has epsilon -1")]
    WrongParity,
    #[error("determinant is not a polynomial in z = x - 1/x")]
    NotRepresentable,
}
