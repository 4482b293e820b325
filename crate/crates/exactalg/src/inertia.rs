//! Exact inertia (positive/negative/zero eigenvalue counts) of symmetric
//! integer matrices via rational congruence diagonalization.

use num::{BigRational, Signed, Zero};

use crate::matrix::IntMatrix;
use crate::ExactAlgError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn dim(&self) -> usize {
        self.positive + self.negative + self.zero
    }

    pub fn sum(&self, other: &Inertia) -> Inertia {
        Inertia {
            positive: self.positive + other.positive,
            negative: self.negative + other.negative,
            zero: self.zero + other.zero,
        }
    }
}

/// Congruence diagonalization over the rationals. Nonzero diagonal pivots
/// contribute their sign; a zero diagonal with a nonzero off-diagonal entry
/// is handled as a hyperbolic 2x2 block contributing (1,1,0); zero rows
/// contribute a zero. No floating point anywhere.
pub fn inertia(s: &IntMatrix) -> Result<Inertia, ExactAlgError> {
    if !s.is_square() {
        return Err(ExactAlgError::NonSquare {
            rows: s.rows(),
            cols: s.cols(),
        });
    }
    if !s.is_symmetric() {
        return Err(ExactAlgError::NotSymmetric(
            "unequal (i,j)/(j,i) entries".into(),
        ));
    }
    let n = s.rows();
    let mut w: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from_integer(s.get(i, j).clone()))
                .collect()
        })
        .collect();
    let mut out = Inertia {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    while !w.is_empty() {
        let n = w.len();
        if !w[0][0].is_zero() {
            if w[0][0].is_positive() {
                out.positive += 1;
            } else {
                out.negative += 1;
            }
            w = schur_pivot(&w);
            continue;
        }
        if let Some(k) = (1..n).find(|&k| !w[k][k].is_zero()) {
            swap_index(&mut w, 0, k);
            continue;
        }
        if let Some(k) = (1..n).find(|&k| !w[0][k].is_zero()) {
            out.positive += 1;
            out.negative += 1;
            w = schur_hyperbolic(&w, k);
            continue;
        }
        // first row (and by symmetry first column) entirely zero
        out.zero += 1;
        w = drop_index(&w, &[0]);
    }
    Ok(out)
}

/// Schur complement over the invertible 1x1 block at index 0.
fn schur_pivot(w: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = w.len();
    let a = &w[0][0];
    (1..n)
        .map(|i| {
            (1..n)
                .map(|j| &w[i][j] - &(&w[i][0] * &w[0][j] / a))
                .collect()
        })
        .collect()
}

/// Schur complement over the invertible hyperbolic 2x2 block on indices
/// {0, k} (both diagonal entries zero, off-diagonal c nonzero).
fn schur_hyperbolic(w: &[Vec<BigRational>], k: usize) -> Vec<Vec<BigRational>> {
    let n = w.len();
    let c = &w[0][k];
    let rest: Vec<usize> = (1..n).filter(|&i| i != k).collect();
    rest.iter()
        .map(|&i| {
            rest.iter()
                .map(|&j| {
                    let corr = (&w[i][0] * &w[k][j] + &w[i][k] * &w[0][j]) / c;
                    &w[i][j] - &corr
                })
                .collect()
        })
        .collect()
}

fn swap_index(w: &mut [Vec<BigRational>], a: usize, b: usize) {
    w.swap(a, b);
    for row in w.iter_mut() {
        row.swap(a, b);
    }
}

fn drop_index(w: &[Vec<BigRational>], gone: &[usize]) -> Vec<Vec<BigRational>> {
    let n = w.len();
    let keep: Vec<usize> = (0..n).filter(|i| !gone.contains(i)).collect();
    keep.iter()
        .map(|&i| keep.iter().map(|&j| w[i][j].clone()).collect())
        .collect()
}
