//! Slice and ribbon obstructions for knot forms: the Fox-Milnor
//! factorization condition on the Alexander polynomial, a bounded exhaustive
//! metabolizer search, the signature and Arf necessary conditions, and the
//! Alexander-module torsion obstruction to ribbonness.
//!
//! Everything here is one-sided: a report can certify "not slice" or "ribbon
//! obstructed", never the converse.

use seifert::{FormKind, SeifertForm};
use thiserror::Error;

mod factor;
pub mod fox_milnor;
pub mod metab;
pub mod ribbon;
pub mod slice;

pub use fox_milnor::{fox_milnor, fox_milnor_capped, FoxMilnor};
pub use metab::{metabolizer_search, MetabolizerOutcome};
pub use ribbon::{ribbon_obstruction, ObstructionVerdict};
pub use slice::{slice_report, SliceOptions, SliceReport, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ObstructError {
    #[error("operation requires a {expected} form, got {got}")]
    KindMismatch { expected: FormKind, got: FormKind },
    #[error("metabolizer search requires even rank, got {0}")]
    OddRank(usize),
    #[error("rank {rank} exceeds the search cap {cap}")]
    RankTooLarge { rank: usize, cap: usize },
    #[error("polynomial degree {degree} exceeds the factorization cap {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },
}

pub(crate) fn require_knot(form: &SeifertForm) -> Result<(), ObstructError> {
    if form.kind() != FormKind::Knot {
        return Err(ObstructError::KindMismatch {
            expected: FormKind::Knot,
            got: form.kind(),
        });
    }
    Ok(())
}
