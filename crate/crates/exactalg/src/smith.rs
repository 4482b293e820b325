//! Smith normal form over the rational Laurent ring Q[t, 1/t].
//!
//! The ring is a principal ideal domain (localization of Q[t]); rows are
//! first scaled by powers of t so all entries live in Q[t], the classical
//! degree-pivoting Smith reduction runs there, and the resulting divisors
//! are normalized by Laurent units q*t^k, under which every t-power and
//! rational content disappears.

use crate::laurent::LaurentPoly;
use crate::matrix::PolyMatrix;
use crate::ExactAlgError;

/// Elementary divisors d_1 | d_2 | ... of a square matrix over Q[t, 1/t],
/// each in primitive normal form (units become exactly 1, zeros sort last).
/// The product of all divisors equals det(M) up to units.
pub fn smith_laurent(m: &PolyMatrix) -> Result<Vec<LaurentPoly>, ExactAlgError> {
    if !m.is_square() {
        return Err(ExactAlgError::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut w: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    // unit row scaling: clear negative exponents so all arithmetic is in Q[t]
    for row in &mut w {
        let min = row.iter().filter_map(|e| e.min_exp()).min();
        if let Some(min) = min {
            if min < 0 {
                for e in row.iter_mut() {
                    *e = e.shifted(-min);
                }
            }
        }
    }
    for p in 0..n {
        loop {
            let Some((bi, bj)) = min_degree_entry(&w, p) else {
                // remaining submatrix is zero; trailing divisors stay zero
                break;
            };
            w.swap(p, bi);
            for row in &mut w {
                row.swap(p, bj);
            }
            let mut dirty = false;
            for i in (p + 1)..n {
                if w[i][p].is_zero() {
                    continue;
                }
                let (q, r) = w[i][p].div_rem(&w[p][p]);
                if !q.is_zero() {
                    for j in p..n {
                        w[i][j] = &w[i][j] - &(&q * &w[p][j]);
                    }
                }
                if !r.is_zero() {
                    dirty = true;
                }
            }
            for j in (p + 1)..n {
                if w[p][j].is_zero() {
                    continue;
                }
                let (q, r) = w[p][j].div_rem(&w[p][p]);
                if !q.is_zero() {
                    for i in p..n {
                        w[i][j] = &w[i][j] - &(&q * &w[i][p]);
                    }
                }
                if !r.is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // pivot row/column clear; force pivot | submatrix
            let mut offender = None;
            'find: for i in (p + 1)..n {
                for j in (p + 1)..n {
                    if !w[i][j].is_zero() {
                        let (_, r) = w[i][j].div_rem(&w[p][p]);
                        if !r.is_zero() {
                            offender = Some(i);
                            break 'find;
                        }
                    }
                }
            }
            match offender {
                Some(i) => {
                    for j in p..n {
                        w[p][j] = &w[p][j] + &w[i][j];
                    }
                }
                None => break,
            }
        }
    }
    let divisors: Vec<LaurentPoly> = (0..n).map(|i| w[i][i].primitive_normal_form()).collect();
    debug_assert!(chain_ok(&divisors));
    Ok(divisors)
}

/// Position of a nonzero entry of minimal polynomial degree in the submatrix
/// starting at (p, p); None if that submatrix is zero.
fn min_degree_entry(w: &[Vec<LaurentPoly>], p: usize) -> Option<(usize, usize)> {
    let n = w.len();
    let mut best: Option<(i64, usize, usize)> = None;
    for i in p..n {
        for j in p..n {
            if w[i][j].is_zero() {
                continue;
            }
            let d = w[i][j].max_exp().unwrap();
            if best.map_or(true, |(bd, _, _)| d < bd) {
                best = Some((d, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

fn chain_ok(divisors: &[LaurentPoly]) -> bool {
    for pair in divisors.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        if a.is_zero() {
            if !b.is_zero() {
                return false;
            }
            continue;
        }
        if !b.is_zero() && b.exact_div(a).is_none() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;
    use crate::matrix::{det_laurent, PolyMatrix};
    use crate::rng::SplitMix64;

    fn tm1() -> LaurentPoly {
        LaurentPoly::from_int_terms(&[(1, 1), (-1, 0)])
    }

    #[test]
    fn diagonal_already_reduced() {
        let m = PolyMatrix::new(
            2,
            2,
            vec![tm1(), LaurentPoly::zero(), LaurentPoly::zero(), tm1()],
        );
        assert_eq!(smith_laurent(&m).unwrap(), vec![tm1(), tm1()]);
    }

    #[test]
    fn laurent_units_normalize_to_one() {
        // diag(t, 1): t is a unit in the Laurent ring, so both divisors are units
        let m = PolyMatrix::new(
            2,
            2,
            vec![
                LaurentPoly::variable(),
                LaurentPoly::zero(),
                LaurentPoly::zero(),
                LaurentPoly::one(),
            ],
        );
        let d = smith_laurent(&m).unwrap();
        assert_eq!(d, vec![LaurentPoly::one(), LaurentPoly::one()]);
        assert!(d.iter().all(|x| x.is_unit_q() || x.is_one()));
    }

    #[test]
    fn zero_and_empty_matrices() {
        assert!(smith_laurent(&PolyMatrix::new(0, 0, vec![])).unwrap().is_empty());
        let z = PolyMatrix::new(2, 2, vec![LaurentPoly::zero(); 4]);
        assert_eq!(
            smith_laurent(&z).unwrap(),
            vec![LaurentPoly::zero(), LaurentPoly::zero()]
        );
    }

    #[test]
    fn coupled_entries_reduce() {
        // [[t-1, 1], [0, t-1]]: the unit entry makes d1 = 1, d2 = (t-1)^2
        let m = PolyMatrix::new(
            2,
            2,
            vec![tm1(), LaurentPoly::one(), LaurentPoly::zero(), tm1()],
        );
        let d = smith_laurent(&m).unwrap();
        assert!(d[0].is_one());
        assert!(d[1].eq_up_to_q_unit(&(&tm1() * &tm1())));
    }

    #[test]
    fn random_matrices_chain_and_det() {
        let mut rng = SplitMix64::new(777);
        for _ in 0..60 {
            let n = 1 + rng.below(4) as usize;
            let mut entries = Vec::with_capacity(n * n);
            for _ in 0..n * n {
                let c0 = rng.int_in(-2, 2);
                let c1 = rng.int_in(-2, 2);
                let e0 = rng.int_in(-1, 1);
                entries.push(LaurentPoly::from_int_terms(&[(c0, e0), (c1, e0 + 1)]));
            }
            let m = PolyMatrix::new(n, n, entries);
            let d = smith_laurent(&m).unwrap();
            assert!(chain_ok(&d));
            let det = det_laurent(&m).unwrap();
            let product = d
                .iter()
                .fold(LaurentPoly::one(), |acc, x| &acc * x);
            if det.is_zero() {
                assert!(product.is_zero());
            } else {
                assert!(product.eq_up_to_q_unit(&det));
            }
        }
    }
}
