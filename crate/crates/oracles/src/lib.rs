//! Independent reference implementations used to cross-check the main
//! algorithms: cofactor-expansion determinants, Sturm-sequence inertia
//! counting, brute-force Arf counting over all 2^n vectors, and bitmask
//! GF(2) elimination.
//!
//! Each oracle deliberately follows a different algorithmic path from the
//! implementation it checks (cofactor vs fraction-free elimination, root
//! counting vs congruence diagonalization, exhaustive counting vs symplectic
//! reduction), so agreement is strong evidence of correctness.

pub mod arf_count;
pub mod dense;
pub mod det;
pub mod gf2chk;
pub mod sturm;

pub use arf_count::{arf_by_counting, CountingArf};
pub use det::{det_cofactor_int, det_cofactor_laurent};
pub use gf2chk::{nullspace_u64, rank_u64, same_span};
pub use sturm::inertia_by_sturm;
