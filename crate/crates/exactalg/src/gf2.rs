//! GF(2) vectors and matrices: rank/nullspace and the greedy symplectic
//! decomposition of an alternating mod-2 pairing.

use crate::ExactAlgError;

/// Dense GF(2) vector; entries are 0/1 bytes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GF2Vec {
    bits: Vec<u8>,
}

impl GF2Vec {
    pub fn zeros(n: usize) -> Self {
        GF2Vec { bits: vec![0; n] }
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.bits[i] = 1;
        v
    }

    pub fn from_bits(bits: Vec<u8>) -> Self {
        assert!(bits.iter().all(|&b| b <= 1), "entries must be 0 or 1");
        GF2Vec { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, i: usize) -> u8 {
        self.bits[i]
    }

    pub fn set(&mut self, i: usize, b: u8) {
        assert!(b <= 1);
        self.bits[i] = b;
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }

    pub fn xor_assign(&mut self, other: &GF2Vec) {
        assert_eq!(self.len(), other.len());
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a ^= b;
        }
    }

    pub fn xored(&self, other: &GF2Vec) -> GF2Vec {
        let mut v = self.clone();
        v.xor_assign(other);
        v
    }

    pub fn dot(&self, other: &GF2Vec) -> u8 {
        assert_eq!(self.len(), other.len());
        self.bits
            .iter()
            .zip(&other.bits)
            .fold(0, |acc, (a, b)| acc ^ (a & b))
    }
}

/// Dense GF(2) matrix; entries are 0/1 bytes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GF2Matrix {
    rows: usize,
    cols: usize,
    bits: Vec<u8>,
}

impl GF2Matrix {
    pub fn new(rows: usize, cols: usize, bits: Vec<u8>) -> Self {
        assert_eq!(bits.len(), rows * cols, "entry count must be rows*cols");
        assert!(bits.iter().all(|&b| b <= 1), "entries must be 0 or 1");
        GF2Matrix { rows, cols, bits }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        GF2Matrix {
            rows,
            cols,
            bits: vec![0; rows * cols],
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut bits = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            bits.extend(row.iter().map(|&v| (v.rem_euclid(2)) as u8));
        }
        GF2Matrix { rows: r, cols: c, bits }
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

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.bits[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, b: u8) {
        assert!(b <= 1);
        self.bits[i * self.cols + j] = b;
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

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.rows.min(self.cols)).all(|i| self.get(i, i) == 0)
    }

    fn row_echelon(&self) -> (Vec<Vec<u8>>, Vec<usize>) {
        let mut rows: Vec<Vec<u8>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).collect())
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            if let Some(p) = (r..rows.len()).find(|&i| rows[i][c] == 1) {
                rows.swap(r, p);
                let pivot_row = rows[r].clone();
                for (i, row) in rows.iter_mut().enumerate() {
                    if i != r && row[c] == 1 {
                        for (x, y) in row.iter_mut().zip(&pivot_row) {
                            *x ^= y;
                        }
                    }
                }
                pivots.push(c);
                r += 1;
            }
        }
        (rows, pivots)
    }

    pub fn rank(&self) -> usize {
        self.row_echelon().1.len()
    }

    /// Basis of the right nullspace.
    pub fn nullspace(&self) -> Vec<GF2Vec> {
        let (rref, pivots) = self.row_echelon();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = GF2Vec::zeros(self.cols);
            v.set(free, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                v.set(pc, rref[r][free]);
            }
            basis.push(v);
        }
        basis
    }

    /// Pairing u^T J v.
    pub fn pair(&self, u: &GF2Vec, v: &GF2Vec) -> u8 {
        assert_eq!(u.len(), self.rows);
        assert_eq!(v.len(), self.cols);
        let mut acc = 0u8;
        for i in 0..self.rows {
            if u.get(i) == 0 {
                continue;
            }
            for j in 0..self.cols {
                acc ^= self.get(i, j) & v.get(j);
            }
        }
        acc
    }
}

fn check_alternating(j: &GF2Matrix) -> Result<(), ExactAlgError> {
    if !j.is_square() {
        return Err(ExactAlgError::NonSquare {
            rows: j.rows(),
            cols: j.cols(),
        });
    }
    if !j.is_symmetric() {
        return Err(ExactAlgError::NotSymmetric(
            "unequal (i,j)/(j,i) entries".into(),
        ));
    }
    if !j.has_zero_diagonal() {
        return Err(ExactAlgError::NotSymmetric(
            "not alternating: nonzero diagonal".into(),
        ));
    }
    Ok(())
}

/// Basis of the radical (nullspace) of an alternating mod-2 pairing; empty
/// when the pairing is nonsingular.
pub fn gf2_radical(j: &GF2Matrix) -> Result<Vec<GF2Vec>, ExactAlgError> {
    check_alternating(j)?;
    Ok(j.nullspace())
}

/// Hyperbolic pairs and radical extracted from an alternating mod-2 pairing.
/// pairs[i] = (x_i, y_i) with J(x_i,y_j) = delta_ij, J(x_i,x_j) = J(y_i,y_j)
/// = 0; the radical pairs to 0 with everything; pairs and radical together
/// form a basis.
#[derive(Debug, Clone)]
pub struct SymplecticDecomposition {
    pub pairs: Vec<(GF2Vec, GF2Vec)>,
    pub radical: Vec<GF2Vec>,
}

impl SymplecticDecomposition {
    /// Direct evaluation of every declared identity, plus the basis property.
    pub fn verify(&self, j: &GF2Matrix) -> bool {
        let n = j.rows();
        let mut all: Vec<&GF2Vec> = Vec::new();
        for (x, y) in &self.pairs {
            all.push(x);
            all.push(y);
        }
        all.extend(self.radical.iter());
        if all.len() != n {
            return false;
        }
        for (a, (xa, ya)) in self.pairs.iter().enumerate() {
            for (b, (xb, yb)) in self.pairs.iter().enumerate() {
                if j.pair(xa, xb) != 0 || j.pair(ya, yb) != 0 {
                    return false;
                }
                let want = u8::from(a == b);
                if j.pair(xa, yb) != want {
                    return false;
                }
            }
        }
        for r in &self.radical {
            for v in &all {
                if j.pair(r, v) != 0 {
                    return false;
                }
            }
        }
        // basis: stack as rows and check full rank
        if n == 0 {
            return true;
        }
        let mut bits = Vec::with_capacity(n * n);
        for v in &all {
            bits.extend_from_slice(v.bits());
        }
        GF2Matrix::new(all.len(), n, bits).rank() == n
    }
}

/// Greedy symplectic decomposition: pick a non-orthogonal pair, normalize it
/// to a hyperbolic pair, pass to the orthogonal complement, repeat; whatever
/// remains is the radical.
pub fn symplectic_decompose(j: &GF2Matrix) -> Result<SymplecticDecomposition, ExactAlgError> {
    check_alternating(j)?;
    let n = j.rows();
    let mut basis: Vec<GF2Vec> = (0..n).map(|i| GF2Vec::basis(n, i)).collect();
    let mut pairs = Vec::new();
    loop {
        let mut found = None;
        'search: for a in 0..basis.len() {
            for b in (a + 1)..basis.len() {
                if j.pair(&basis[a], &basis[b]) == 1 {
                    found = Some((a, b));
                    break 'search;
                }
            }
        }
        let Some((a, b)) = found else { break };
        let y = basis.remove(b);
        let x = basis.remove(a);
        for v in &mut basis {
            // v -> v + J(v,y) x + J(v,x) y kills both pairings with x and y
            let cy = j.pair(v, &y);
            let cx = j.pair(v, &x);
            if cy == 1 {
                v.xor_assign(&x);
            }
            if cx == 1 {
                v.xor_assign(&y);
            }
        }
        pairs.push((x, y));
    }
    Ok(SymplecticDecomposition {
        pairs,
        radical: basis,
    })
}
