//! Conway polynomial via the balanced determinant `D(x) = det(xA - x^-1 A^T)`
//! rewritten exactly as a polynomial in `z = x - 1/x`.

use exactalg::{det_laurent, LaurentPoly, PolyMatrix};
use num::{BigInt, BigRational};

use crate::{Epsilon, SeifertError, SeifertForm};

/// Conway polynomial with the two low coefficients used by the concordance
/// identities broken out. `nabla` is a polynomial in `z` (all exponents are
/// at least 0); knot forms produce only even powers, link1 forms only odd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConwayData {
    pub nabla: LaurentPoly,
    pub c1: BigInt,
    pub c3: BigInt,
}

impl ConwayData {
    pub fn display(&self) -> String {
        self.nabla.display_with("z")
    }
}

/// Rewrites a Laurent polynomial in `x` as a polynomial in `z = x - 1/x` by
/// stripping leading terms against the monic expansions of `z^k`. Fails when
/// a remainder with negative exponents survives, which cannot happen for
/// balanced determinants of square integer matrices.
fn rewrite_in_z(d: &LaurentPoly) -> Result<LaurentPoly, SeifertError> {
    let z = &LaurentPoly::int_term(1, 1) - &LaurentPoly::int_term(1, -1);
    let mut rem = d.clone();
    let mut out = LaurentPoly::zero();
    while rem.max_exp().is_some_and(|k| k > 0) {
        let k = rem.max_exp().unwrap();
        let c = rem.coeff(k);
        out = &out + &LaurentPoly::term(c.clone(), k);
        rem = &rem - &z.pow(k as u32).scaled(&c);
    }
    // z^k is monic with top exponent k, so the maximum strictly drops each
    // pass; what survives must be a bare constant (the z^0 coefficient)
    if rem.min_exp().is_none_or(|e| e == 0) {
        Ok(&out + &rem)
    } else {
        Err(SeifertError::NotRepresentable)
    }
}

/// Conway polynomial of an epsilon +1 form: `det(xA - x^-1 A^T)` written in
/// `z = x - 1/x`, plus the coefficients of `z` and `z^3`.
pub fn conway(form: &SeifertForm) -> Result<ConwayData, SeifertError> {
    if form.epsilon() == Epsilon::Minus {
        return Err(SeifertError::WrongParity);
    }
    let a = form.matrix();
    let balanced = PolyMatrix::from_fn(form.rank(), form.rank(), |i, j| {
        let up = BigRational::from_integer(a.get(i, j).clone());
        let down = BigRational::from_integer(-a.get(j, i));
        &LaurentPoly::term(up, 1) + &LaurentPoly::term(down, -1)
    });
    let d = det_laurent(&balanced).expect("balanced matrix is square");
    let nabla = rewrite_in_z(&d)?;
    let c1 = nabla.coeff_int(1);
    let c3 = nabla.coeff_int(3);
    Ok(ConwayData { nabla, c1, c3 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::FormKind;
    use exactalg::{IntMatrix, SplitMix64};

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows)
    }

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(terms)
    }

    #[test]
    fn conway_golden() {
        let empty = SeifertForm::knot(IntMatrix::zeros(0, 0), Epsilon::Plus);
        assert_eq!(conway(&empty).unwrap().nabla, LaurentPoly::one());

        let annulus = SeifertForm::link1(m(&[vec![1]]));
        let data = conway(&annulus).unwrap();
        assert_eq!(data.nabla, poly(&[(1, 1)]));
        assert_eq!(data.c1, BigInt::from(1));
        assert_eq!(data.display(), "z");

        let trefoil = SeifertForm::knot(m(&[vec![-1, 1], vec![0, -1]]), Epsilon::Plus);
        let data = conway(&trefoil).unwrap();
        assert_eq!(data.nabla, poly(&[(1, 2), (1, 0)]));
        assert_eq!(data.display(), "z^2 + 1");

        let torus = SeifertForm::link1(m(&[vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]]));
        let data = conway(&torus).unwrap();
        assert_eq!(data.nabla, poly(&[(1, 3), (2, 1)]));
        assert_eq!(data.c1, BigInt::from(2));
        assert_eq!(data.c3, BigInt::from(1));
    }

    #[test]
    fn split_link_vanishes() {
        // block sum with a null row models a split union: determinant 0
        let split = SeifertForm::link1(m(&[
            vec![-1, 1, 0],
            vec![0, -1, 0],
            vec![0, 0, 0],
        ]));
        assert!(conway(&split).unwrap().nabla.is_zero());
    }

    #[test]
    fn negative_epsilon_is_rejected() {
        let f = SeifertForm::knot(m(&[vec![1]]), Epsilon::Minus);
        assert_eq!(conway(&f), Err(SeifertError::WrongParity));
    }

    #[test]
    fn parity_of_exponents_matches_rank(){
        let mut rng = SplitMix64::new(12);
        for _ in 0..80 {
            let n = rng.below(6) as usize;
            let mut a = IntMatrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    a.set(i, j, rng.int_in(-3, 3).into());
                }
            }
            let kind = if n % 2 == 0 { FormKind::Knot } else { FormKind::Link1 };
            let form = SeifertForm::new(a, Epsilon::Plus, kind);
            let data = conway(&form).unwrap();
            for (e, _) in data.nabla.terms() {
                assert!(e >= 0);
                assert_eq!(e.rem_euclid(2), (n as i64).rem_euclid(2), "rank {n}");
            }
        }
    }
}
