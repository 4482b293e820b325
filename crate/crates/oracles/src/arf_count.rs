//! Arf oracle by exhaustive counting: evaluate q(v) = v^T A v mod 2 on all
//! 2^n vectors and classify by the zero count. For a quadratic refinement of
//! a pairing with radical dimension rho on which q vanishes,
//!     #zeros = 2^(n-1) +- 2^((n+rho)/2 - 1),
//! with + for Arf 0 and - for Arf 1; if q does not vanish on the radical the
//! count is exactly 2^(n-1) and the invariant is undefined.

use exactalg::IntMatrix;
use num::Integer;

use crate::gf2chk::rank_u64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountingArf {
    Zero,
    One,
    Undefined,
}

pub fn arf_by_counting(a: &IntMatrix) -> CountingArf {
    assert!(a.is_square(), "counting oracle needs a square matrix");
    let n = a.rows();
    assert!(n <= 24, "counting oracle is exponential; rank too large");
    if n == 0 {
        return CountingArf::Zero;
    }
    // diagonal parities and pairing rows J = (A + A^T) mod 2 as bitmasks
    let mut dmask = 0u64;
    let mut jrows = vec![0u64; n];
    for i in 0..n {
        if a.get(i, i).is_odd() {
            dmask |= 1 << i;
        }
        for j in 0..n {
            if i != j && (a.get(i, j) + a.get(j, i)).is_odd() {
                jrows[i] |= 1 << j;
            }
        }
    }
    // restrict each row to partners j > i so every pair is counted once
    let rows_gt: Vec<u64> = jrows
        .iter()
        .enumerate()
        .map(|(i, r)| r & !((1u64 << (i + 1)) - 1))
        .collect();
    let mut zeros = 0u64;
    for v in 0u64..(1u64 << n) {
        let mut q = (dmask & v).count_ones() & 1;
        let mut rest = v;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            q ^= (rows_gt[i] & v).count_ones() & 1;
        }
        if q == 0 {
            zeros += 1;
        }
    }
    let rho = n - rank_u64(&jrows, n);
    debug_assert_eq!((n - rho) % 2, 0, "pairing quotient must be symplectic");
    let half = 1u64 << (n - 1);
    let offset = 1u64 << ((n + rho) / 2 - 1);
    if zeros == half {
        CountingArf::Undefined
    } else if zeros == half + offset {
        CountingArf::Zero
    } else if zeros == half - offset {
        CountingArf::One
    } else {
        unreachable!("zero count {zeros} is impossible for a quadratic refinement of rank {n}");
    }
}
