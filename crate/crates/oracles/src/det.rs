//! Determinant oracles by recursive cofactor expansion along the first row.
//! Exponential but exact; intended for small matrices in equivalence tests.

use exactalg::{IntMatrix, LaurentPoly, PolyMatrix};
use num::{BigInt, One, Zero};

pub fn det_cofactor_int(m: &IntMatrix) -> BigInt {
    assert!(m.is_square(), "cofactor oracle needs a square matrix");
    let n = m.rows();
    let cols: Vec<usize> = (0..n).collect();
    go_int(m, 0, &cols)
}

fn go_int(m: &IntMatrix, row: usize, cols: &[usize]) -> BigInt {
    if cols.is_empty() {
        return BigInt::one();
    }
    let mut acc = BigInt::zero();
    for (k, &j) in cols.iter().enumerate() {
        let a = m.get(row, j);
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols
            .iter()
            .copied()
            .filter(|&c| c != j)
            .collect();
        let minor = go_int(m, row + 1, &rest);
        let term = a * minor;
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

pub fn det_cofactor_laurent(m: &PolyMatrix) -> LaurentPoly {
    assert!(m.is_square(), "cofactor oracle needs a square matrix");
    let n = m.rows();
    let cols: Vec<usize> = (0..n).collect();
    go_laurent(m, 0, &cols)
}

fn go_laurent(m: &PolyMatrix, row: usize, cols: &[usize]) -> LaurentPoly {
    if cols.is_empty() {
        return LaurentPoly::one();
    }
    let mut acc = LaurentPoly::zero();
    for (k, &j) in cols.iter().enumerate() {
        let a = m.get(row, j);
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols
            .iter()
            .copied()
            .filter(|&c| c != j)
            .collect();
        let minor = go_laurent(m, row + 1, &rest);
        let term = a * &minor;
        if k % 2 == 0 {
            acc = &acc + &term;
        } else {
            acc = &acc - &term;
        }
    }
    acc
}
