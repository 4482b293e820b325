//! Inertia oracle: characteristic polynomial by cofactor expansion, Yun
//! squarefree split for multiplicities, and Sturm chains to count real roots
//! on each side of zero. Entirely independent of congruence diagonalization.

use exactalg::{Inertia, IntMatrix};
use num::{BigInt, BigRational, Signed, Zero};

use crate::dense::QPoly;

/// Characteristic polynomial det(xI - S) by cofactor expansion over dense
/// rational polynomials.
fn char_poly(s: &IntMatrix) -> QPoly {
    let n = s.rows();
    let entries: Vec<Vec<QPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let a = BigRational::from_integer(-s.get(i, j).clone());
                    if i == j {
                        QPoly::new(vec![a, BigRational::from_integer(BigInt::from(1))])
                    } else {
                        QPoly::new(vec![a])
                    }
                })
                .collect()
        })
        .collect();
    let cols: Vec<usize> = (0..n).collect();
    det_poly(&entries, 0, &cols)
}

fn det_poly(m: &[Vec<QPoly>], row: usize, cols: &[usize]) -> QPoly {
    if cols.is_empty() {
        return QPoly::one();
    }
    let mut acc = QPoly::zero();
    for (k, &j) in cols.iter().enumerate() {
        let a = &m[row][j];
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&c| c != j).collect();
        let term = a.mul(&det_poly(m, row + 1, &rest));
        acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

fn sturm_chain(p: &QPoly) -> Vec<QPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let k = chain.len();
        if chain[k - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[k - 2].div_rem(&chain[k - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r.neg());
    }
    chain
}

fn sign_variations(chain: &[QPoly], x: &BigRational) -> usize {
    let mut last: Option<bool> = None;
    let mut v = 0;
    for p in chain {
        let val = p.eval(x);
        if val.is_zero() {
            continue;
        }
        let pos = val.is_positive();
        if let Some(prev) = last {
            if prev != pos {
                v += 1;
            }
        }
        last = Some(pos);
    }
    v
}

/// Distinct real roots of a squarefree polynomial in the half-open interval
/// (a, b], by Sturm's theorem.
fn roots_in(chain: &[QPoly], a: &BigRational, b: &BigRational) -> usize {
    sign_variations(chain, a) - sign_variations(chain, b)
}

/// Exact inertia of a symmetric integer matrix by root counting on the
/// characteristic polynomial.
pub fn inertia_by_sturm(s: &IntMatrix) -> Inertia {
    assert!(s.is_symmetric(), "Sturm oracle needs a symmetric matrix");
    let n = s.rows();
    if n == 0 {
        return Inertia { positive: 0, negative: 0, zero: 0 };
    }
    let p = char_poly(s);
    let zero_mult = p.root_zero_multiplicity();
    // strip x^zero_mult; the remainder has nonzero constant term
    let reduced = QPoly::new((zero_mult..=p.degree()).map(|i| p.coeff(i)).collect());
    let mut positive = 0usize;
    let mut negative = 0usize;
    if !reduced.is_constant() {
        for (g, mult) in reduced.squarefree_decomposition() {
            let chain = sturm_chain(&g);
            let bound = g.cauchy_bound();
            let zero = BigRational::zero();
            positive += mult * roots_in(&chain, &zero, &bound);
            negative += mult * roots_in(&chain, &(-bound), &zero);
        }
    }
    let counted = Inertia {
        positive,
        negative,
        zero: zero_mult,
    };
    assert_eq!(counted.dim(), n, "real-root count must exhaust the spectrum");
    counted
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows)
    }

    #[test]
    fn golden_cases() {
        assert_eq!(
            inertia_by_sturm(&m(&[vec![2, 1], vec![1, 0]])),
            Inertia { positive: 1, negative: 1, zero: 0 }
        );
        assert_eq!(
            inertia_by_sturm(&m(&[
                vec![2, 1, 0, 0],
                vec![1, 0, 2, 0],
                vec![0, 2, 0, 1],
                vec![0, 0, 1, 2]
            ])),
            Inertia { positive: 3, negative: 1, zero: 0 }
        );
        assert_eq!(
            inertia_by_sturm(&IntMatrix::zeros(3, 3)),
            Inertia { positive: 0, negative: 0, zero: 3 }
        );
    }

    #[test]
    fn repeated_eigenvalues() {
        // diag(2, 2, -1, 0): char poly (x-2)^2 (x+1) x
        let s = m(&[
            vec![2, 0, 0, 0],
            vec![0, 2, 0, 0],
            vec![0, 0, -1, 0],
            vec![0, 0, 0, 0],
        ]);
        assert_eq!(
            inertia_by_sturm(&s),
            Inertia { positive: 2, negative: 1, zero: 1 }
        );
    }
}
