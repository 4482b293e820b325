//! Dense integer and Laurent-polynomial matrices with fraction-free
//! (Bareiss) determinants, plus a seeded unimodular-matrix generator.

use num::{BigInt, Integer, One, Zero};

use crate::gf2::GF2Matrix;
use crate::laurent::LaurentPoly;
use crate::rng::SplitMix64;
use crate::ExactAlgError;

/// Row-major matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        IntMatrix { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Convenience constructor from literal rows; panics on ragged input.
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            entries.extend(row.iter().map(|&v| BigInt::from(v)));
        }
        IntMatrix { rows: r, cols: c, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn scaled_i64(&self, c: i64) -> Self {
        let c = BigInt::from(c);
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * &c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// [[a, b], [c, d]] with matching block shapes.
    pub fn block2x2(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        assert_eq!(a.rows, b.rows);
        assert_eq!(c.rows, d.rows);
        assert_eq!(a.cols, c.cols);
        assert_eq!(b.cols, d.cols);
        let rows = a.rows + c.rows;
        let cols = a.cols + b.cols;
        let mut out = Self::zeros(rows, cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                out.set(i, j, a.get(i, j).clone());
            }
            for j in 0..b.cols {
                out.set(i, a.cols + j, b.get(i, j).clone());
            }
        }
        for i in 0..c.rows {
            for j in 0..c.cols {
                out.set(a.rows + i, j, c.get(i, j).clone());
            }
            for j in 0..d.cols {
                out.set(a.rows + i, a.cols + j, d.get(i, j).clone());
            }
        }
        out
    }

    pub fn block_diag(a: &Self, b: &Self) -> Self {
        Self::block2x2(
            a,
            &Self::zeros(a.rows, b.cols),
            &Self::zeros(b.rows, a.cols),
            b,
        )
    }

    pub fn mod2(&self) -> GF2Matrix {
        GF2Matrix::new(
            self.rows,
            self.cols,
            self.entries.iter().map(|e| u8::from(e.is_odd())).collect(),
        )
    }

    /// All entries as i64 when they fit; None otherwise.
    pub fn to_i64_entries(&self) -> Option<Vec<i64>> {
        self.entries.iter().map(|e| i64::try_from(e).ok()).collect()
    }
}

/// Minimal ring interface for the shared Bareiss elimination.
pub(crate) trait BareissRing: Clone {
    fn b_zero() -> Self;
    fn b_one() -> Self;
    fn b_is_zero(&self) -> bool;
    fn b_mul(&self, other: &Self) -> Self;
    fn b_sub(&self, other: &Self) -> Self;
    /// Division known to be exact by the Sylvester identity; panics otherwise.
    fn b_exact_div(&self, other: &Self) -> Self;
}

impl BareissRing for BigInt {
    fn b_zero() -> Self {
        BigInt::zero()
    }
    fn b_one() -> Self {
        BigInt::one()
    }
    fn b_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn b_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn b_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn b_exact_div(&self, other: &Self) -> Self {
        let (q, r) = self.div_rem(other);
        assert!(r.is_zero(), "inexact division in integer elimination");
        q
    }
}

impl BareissRing for LaurentPoly {
    fn b_zero() -> Self {
        LaurentPoly::zero()
    }
    fn b_one() -> Self {
        LaurentPoly::one()
    }
    fn b_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn b_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn b_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn b_exact_div(&self, other: &Self) -> Self {
        self.exact_div(other)
            .expect("inexact division in polynomial elimination")
    }
}

/// Fraction-free Bareiss elimination; exact over any integral domain and
/// independent of expansion order. det of the empty matrix is 1.
pub(crate) fn bareiss_det<T: BareissRing>(n: usize, at: impl Fn(usize, usize) -> T) -> T {
    if n == 0 {
        return T::b_one();
    }
    let mut m: Vec<Vec<T>> = (0..n).map(|i| (0..n).map(|j| at(i, j)).collect()).collect();
    let mut positive = true;
    let mut prev = T::b_one();
    for k in 0..n - 1 {
        if m[k][k].b_is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].b_is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    positive = !positive;
                }
                None => return T::b_zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[k][k].b_mul(&m[i][j]).b_sub(&m[i][k].b_mul(&m[k][j]));
                m[i][j] = t.b_exact_div(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if positive {
        d
    } else {
        T::b_zero().b_sub(&d)
    }
}

/// i128 Bareiss, used when a Hadamard bound certifies that every
/// intermediate product stays far below i128::MAX. Exact when it applies.
fn det_i128_checked(n: usize, entries: &[i64]) -> Option<i128> {
    // Every Bareiss intermediate is a k x k minor of the input, bounded by
    // (sqrt(n) * maxabs)^n; the update multiplies two of them before the
    // exact division, so require bound^2 to fit comfortably in i128.
    let maxabs = entries.iter().map(|e| e.unsigned_abs()).max().unwrap_or(0);
    let bound = (n as f64).sqrt().powi(n as i32) * (maxabs.max(1) as f64).powi(n as i32);
    if !(bound < 1e17) {
        return None;
    }
    let mut m: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| entries[i * n + j] as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return Some(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    Some(sign * m[n - 1][n - 1])
}

/// Exact determinant of an integer matrix.
pub fn det_int(m: &IntMatrix) -> Result<BigInt, ExactAlgError> {
    if !m.is_square() {
        return Err(ExactAlgError::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    if let Some(small) = m.to_i64_entries() {
        if let Some(d) = det_i128_checked(n, &small) {
            return Ok(BigInt::from(d));
        }
    }
    Ok(bareiss_det(n, |i, j| m.get(i, j).clone()))
}

/// Row-major matrix of Laurent polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<LaurentPoly>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        PolyMatrix { rows, cols, entries }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly) -> Self {
        let entries = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        PolyMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.entries[i * self.cols + j] = v;
    }
}

/// Exact determinant over the Laurent ring; the result does not depend on
/// expansion order.
pub fn det_laurent(m: &PolyMatrix) -> Result<LaurentPoly, ExactAlgError> {
    if !m.is_square() {
        return Err(ExactAlgError::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    Ok(bareiss_det(m.rows, |i, j| m.get(i, j).clone()))
}

/// Seeded unimodular matrix: a bounded product of elementary row operations
/// (shears with coefficient in {-2..2}\{0}, swaps, negations) applied to the
/// identity. det is always +-1 and the same seed reproduces the same matrix.
pub fn random_unimodular(n: usize, seed: u64) -> IntMatrix {
    let mut rng = SplitMix64::new(seed);
    let mut m = IntMatrix::identity(n);
    if n == 0 {
        return m;
    }
    let ops = 3 * n + 2;
    for _ in 0..ops {
        let kind = rng.below(8);
        if kind < 5 && n >= 2 {
            // row_j += c * row_i
            let i = rng.below(n as u64) as usize;
            let mut j = rng.below((n - 1) as u64) as usize;
            if j >= i {
                j += 1;
            }
            let c = BigInt::from(*[-2, -1, 1, 2].get(rng.below(4) as usize).unwrap());
            for k in 0..n {
                let v = m.get(j, k) + m.get(i, k) * &c;
                m.set(j, k, v);
            }
        } else if kind < 7 && n >= 2 {
            let i = rng.below(n as u64) as usize;
            let mut j = rng.below((n - 1) as u64) as usize;
            if j >= i {
                j += 1;
            }
            for k in 0..n {
                let (a, b) = (m.get(i, k).clone(), m.get(j, k).clone());
                m.set(i, k, b);
                m.set(j, k, a);
            }
        } else {
            let i = rng.below(n as u64) as usize;
            for k in 0..n {
                let v = -m.get(i, k);
                m.set(i, k, v);
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_int_golden() {
        assert_eq!(det_int(&IntMatrix::identity(3)).unwrap(), BigInt::from(1));
        let m = IntMatrix::from_i64_rows(&[
            vec![2, 1, 0, 0],
            vec![1, 0, 2, 0],
            vec![0, 2, 0, 1],
            vec![0, 0, 1, 2],
        ]);
        assert_eq!(det_int(&m).unwrap(), BigInt::from(-15));
        assert_eq!(det_int(&IntMatrix::zeros(0, 0)).unwrap(), BigInt::from(1));
        assert_eq!(det_int(&IntMatrix::zeros(2, 2)).unwrap(), BigInt::from(0));
    }

    #[test]
    fn det_int_rejects_non_square() {
        let err = det_int(&IntMatrix::zeros(2, 3)).unwrap_err();
        assert_eq!(err, ExactAlgError::NonSquare { rows: 2, cols: 3 });
    }

    #[test]
    fn det_int_fast_and_slow_paths_agree() {
        // Entries chosen so the Hadamard guard rejects the i128 path.
        let big = i64::MAX / 4;
        let m = IntMatrix::from_i64_rows(&[vec![big, 1], vec![1, big]]);
        let expected = BigInt::from(big) * BigInt::from(big) - BigInt::from(1);
        assert_eq!(det_int(&m).unwrap(), expected);
    }

    #[test]
    fn det_laurent_golden() {
        let t = LaurentPoly::variable();
        let one = LaurentPoly::one();
        let m = PolyMatrix::new(1, 1, vec![&t - &one]);
        assert_eq!(det_laurent(&m).unwrap(), &t - &one);
        let m2 = PolyMatrix::new(2, 2, vec![t.clone(), one.clone(), one.clone(), t.clone()]);
        assert_eq!(
            det_laurent(&m2).unwrap(),
            LaurentPoly::from_int_terms(&[(1, 2), (-1, 0)])
        );
    }

    #[test]
    fn det_laurent_zero_column() {
        let z = LaurentPoly::zero();
        let t = LaurentPoly::variable();
        let m = PolyMatrix::new(2, 2, vec![z.clone(), t.clone(), z.clone(), t.clone()]);
        assert!(det_laurent(&m).unwrap().is_zero());
    }

    #[test]
    fn random_unimodular_has_unit_det() {
        for seed in 0..50 {
            for n in 0..6 {
                let p = random_unimodular(n, seed);
                let d = det_int(&p).unwrap();
                assert!(d == BigInt::from(1) || d == BigInt::from(-1), "n={n} seed={seed}");
            }
        }
    }

    #[test]
    fn random_unimodular_varies_with_seed() {
        let distinct = (0..100)
            .map(|s| random_unimodular(5, s))
            .collect::<Vec<_>>();
        let mut hits = 0;
        for i in 0..distinct.len() {
            for j in (i + 1)..distinct.len() {
                if distinct[i] == distinct[j] {
                    hits += 1;
                }
            }
        }
        assert_eq!(hits, 0, "collisions across 100 seeds");
    }

    #[test]
    fn block_helpers() {
        let a = IntMatrix::from_i64_rows(&[vec![1, 2], vec![3, 4]]);
        let b = IntMatrix::from_i64_rows(&[vec![5], vec![6]]);
        let c = IntMatrix::from_i64_rows(&[vec![7, 8]]);
        let d = IntMatrix::from_i64_rows(&[vec![9]]);
        let m = IntMatrix::block2x2(&a, &b, &c, &d);
        assert_eq!(
            m,
            IntMatrix::from_i64_rows(&[vec![1, 2, 5], vec![3, 4, 6], vec![7, 8, 9]])
        );
        let bd = IntMatrix::block_diag(&a, &d);
        assert_eq!(
            bd,
            IntMatrix::from_i64_rows(&[vec![1, 2, 0], vec![3, 4, 0], vec![0, 0, 9]])
        );
    }

    #[test]
    fn transpose_and_symmetry() {
        let a = IntMatrix::from_i64_rows(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(
            a.transpose(),
            IntMatrix::from_i64_rows(&[vec![1, 3], vec![2, 4]])
        );
        assert!(!a.is_symmetric());
        assert!(a.add(&a.transpose()).is_symmetric());
    }
}
