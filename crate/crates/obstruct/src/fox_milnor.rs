//! Fox-Milnor condition: a slice knot's Alexander polynomial factors as
//! f(t) * f(1/t) up to units. Tested exactly by factoring the polynomial
//! over the rationals and pairing each irreducible with its reciprocal mate.

use exactalg::LaurentPoly;
use num::{BigRational, One};
use seifert::{alexander, SeifertForm};

use crate::factor::{factor_primitive, ZPoly};
use crate::{require_knot, ObstructError};

pub const DEFAULT_DEGREE_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FoxMilnor {
    /// The factorization exists; `witness` satisfies
    /// `delta = witness(t) * witness(1/t)` up to units.
    Pass { witness: LaurentPoly },
    /// `factor` cannot be paired away: a self-reciprocal irreducible of odd
    /// multiplicity, an unmatched factor, or a degenerate polynomial.
    Fail {
        factor: LaurentPoly,
        multiplicity: usize,
    },
}

impl FoxMilnor {
    pub fn passed(&self) -> bool {
        matches!(self, FoxMilnor::Pass { .. })
    }
}

fn laurent_of(z: &ZPoly) -> LaurentPoly {
    z.coeffs()
        .iter()
        .enumerate()
        .fold(LaurentPoly::zero(), |acc, (k, c)| {
            &acc + &LaurentPoly::term(BigRational::from_integer(c.clone()), k as i64)
        })
}

fn zpoly_of(delta: &LaurentPoly) -> ZPoly {
    assert_eq!(delta.min_exp(), Some(0), "normal form starts at exponent 0");
    let top = delta.max_exp().unwrap();
    ZPoly::from_coeffs((0..=top).map(|k| delta.coeff_int(k)).collect())
}

pub fn fox_milnor(form: &SeifertForm) -> Result<FoxMilnor, ObstructError> {
    fox_milnor_capped(form, DEFAULT_DEGREE_CAP)
}

/// Same test with an explicit cap on the degree the factorizer will accept.
pub fn fox_milnor_capped(
    form: &SeifertForm,
    degree_cap: usize,
) -> Result<FoxMilnor, ObstructError> {
    require_knot(form)?;
    let delta = alexander(form).expect("kind checked above");
    if delta.is_zero() {
        // degenerate presentation determinant; certainly not a slice form
        return Ok(FoxMilnor::Fail {
            factor: LaurentPoly::zero(),
            multiplicity: 1,
        });
    }
    let degree = delta.span_degree();
    if degree > degree_cap {
        return Err(ObstructError::DegreeTooLarge {
            degree,
            cap: degree_cap,
        });
    }

    let z = zpoly_of(&delta);
    let mut witness = LaurentPoly::one();

    // integer content must be a perfect square (it equals content(f)^2)
    let content = z.content();
    if !content.is_one() {
        let root = content.sqrt();
        if &root * &root != content {
            return Ok(FoxMilnor::Fail {
                factor: LaurentPoly::constant(BigRational::from_integer(content)),
                multiplicity: 1,
            });
        }
        witness = witness.scaled(&BigRational::from_integer(root));
    }

    let factors = factor_primitive(&z.primitive_positive());
    let mut counted: Vec<(ZPoly, usize)> = Vec::new();
    for g in factors {
        match counted.iter_mut().find(|(h, _)| *h == g) {
            Some((_, m)) => *m += 1,
            None => counted.push((g, 1)),
        }
    }

    let mut consumed = vec![false; counted.len()];
    for i in 0..counted.len() {
        if consumed[i] {
            continue;
        }
        let (g, m) = (&counted[i].0, counted[i].1);
        let mate = g.reciprocal_normalized();
        if mate == *g {
            // self-reciprocal: needs even multiplicity
            if m % 2 != 0 {
                return Ok(FoxMilnor::Fail {
                    factor: laurent_of(g),
                    multiplicity: m,
                });
            }
            witness = &witness * &laurent_of(g).pow((m / 2) as u32);
        } else {
            let j = counted.iter().position(|(h, _)| *h == mate);
            let mate_mult = j.map_or(0, |j| counted[j].1);
            if mate_mult != m {
                return Ok(FoxMilnor::Fail {
                    factor: laurent_of(g),
                    multiplicity: m,
                });
            }
            witness = &witness * &laurent_of(g).pow(m as u32);
            consumed[j.unwrap()] = true;
        }
        consumed[i] = true;
    }

    debug_assert!(
        (&witness * &witness.reciprocal()).eq_up_to_q_unit(&delta),
        "witness must reproduce the polynomial"
    );
    Ok(FoxMilnor::Pass { witness })
}
