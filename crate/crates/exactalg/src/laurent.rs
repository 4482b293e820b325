//! Laurent polynomials in one variable with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

/// Sum of c_e * t^e over integer exponents e, with exact rational
/// coefficients. Zero coefficients are never stored, so structural equality
/// is semantic equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::int_term(1, 0)
    }

    /// The variable t itself.
    pub fn variable() -> Self {
        Self::int_term(1, 1)
    }

    pub fn term(coeff: BigRational, exp: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        LaurentPoly { coeffs }
    }

    pub fn int_term(coeff: i64, exp: i64) -> Self {
        Self::term(BigRational::from_integer(BigInt::from(coeff)), exp)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(c, 0)
    }

    /// Build from (coefficient, exponent) pairs; repeated exponents add up.
    pub fn from_int_terms(terms: &[(i64, i64)]) -> Self {
        let mut coeffs: BTreeMap<i64, BigRational> = BTreeMap::new();
        for &(c, e) in terms {
            let entry = coeffs.entry(e).or_insert_with(BigRational::zero);
            *entry += BigRational::from_integer(BigInt::from(c));
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(0).is_one()
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Coefficient that is known to be an integer (e.g. in determinants of
    /// integer matrices). Panics if it is not.
    pub fn coeff_int(&self, exp: i64) -> BigInt {
        let c = self.coeff(exp);
        assert!(c.is_integer(), "coefficient of exponent {exp} is not an integer");
        c.to_integer()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.values().next_back()
    }

    /// Exponent spread max-min: the plain polynomial degree once the lowest
    /// exponent is shifted to 0. The zero polynomial reports 0.
    pub fn span_degree(&self) -> usize {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (hi - lo) as usize,
            _ => 0,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Multiply by t^k.
    pub fn shifted(&self, k: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scaled(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Image under t -> 1/t.
    pub fn reciprocal(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Exact evaluation; None when x = 0 and a negative exponent is present.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (e, c) in self.terms() {
            let p = if e >= 0 {
                rational_pow(x, e as u32)
            } else {
                if x.is_zero() {
                    return None;
                }
                rational_pow(x, (-e) as u32).recip()
            };
            acc += c * p;
        }
        Some(acc)
    }

    /// Canonical representative under units +-t^k of the integer Laurent
    /// ring: lowest exponent shifted to 0 and leading (highest-degree)
    /// coefficient positive. Two polynomials are equal up to units iff their
    /// normal forms are structurally equal.
    pub fn normal_form(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let p = self.shifted(-self.min_exp().unwrap());
        if p.leading_coeff().unwrap().is_negative() {
            -&p
        } else {
            p
        }
    }

    /// Canonical representative under units q*t^k of the *rational* Laurent
    /// ring: lowest exponent 0, coefficients scaled to coprime integers,
    /// leading coefficient positive. Every unit normalizes to exactly 1.
    pub fn primitive_normal_form(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let nf = self.normal_form();
        let content = nf.content();
        nf.scaled(&content.recip())
    }

    /// Positive rational c such that self/c has coprime integer coefficients.
    /// Must not be called on the zero polynomial.
    pub fn content(&self) -> BigRational {
        assert!(!self.is_zero(), "content of the zero polynomial");
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.coeffs.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        BigRational::new(num_gcd, den_lcm)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    /// Unit of the integer Laurent ring: +-t^k.
    pub fn is_unit_int(&self) -> bool {
        self.coeffs.len() == 1 && self.leading_coeff().unwrap().abs().is_one()
    }

    /// Unit of the rational Laurent ring: q*t^k with q nonzero.
    pub fn is_unit_q(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Equality up to +-t^k.
    pub fn eq_up_to_unit(&self, other: &Self) -> bool {
        self.normal_form() == other.normal_form()
    }

    /// Equality up to q*t^k.
    pub fn eq_up_to_q_unit(&self, other: &Self) -> bool {
        self.primitive_normal_form() == other.primitive_normal_form()
    }

    /// Quotient and remainder as ordinary polynomials in t. Both operands
    /// must be free of negative exponents and the divisor nonzero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        assert!(
            self.min_exp().unwrap_or(0) >= 0 && d.min_exp().unwrap() >= 0,
            "div_rem operands must be ordinary polynomials"
        );
        let dd = d.max_exp().unwrap();
        if self.is_zero() || self.max_exp().unwrap() < dd {
            return (Self::zero(), self.clone());
        }
        let nd = self.max_exp().unwrap();
        let mut rem: Vec<BigRational> = vec![BigRational::zero(); (nd + 1) as usize];
        for (e, c) in self.terms() {
            rem[e as usize] = c.clone();
        }
        let dlead = d.coeff(dd);
        let mut quot: Vec<BigRational> = vec![BigRational::zero(); (nd - dd + 1) as usize];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dd as usize].clone();
            if top.is_zero() {
                continue;
            }
            let f = &top / &dlead;
            for (e, c) in d.terms() {
                let idx = k + e as usize;
                let delta = c * &f;
                rem[idx] = &rem[idx] - &delta;
            }
            quot[k] = f;
        }
        let q = LaurentPoly {
            coeffs: quot
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e as i64, c))
                .collect(),
        };
        let r = LaurentPoly {
            coeffs: rem
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e as i64, c))
                .collect(),
        };
        (q, r)
    }

    /// Exact division in the Laurent ring; None if d does not divide self.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_zero() {
            return None;
        }
        let sm = self.min_exp().unwrap();
        let dm = d.min_exp().unwrap();
        let (q, r) = self.shifted(-sm).div_rem(&d.shifted(-dm));
        if r.is_zero() {
            Some(q.shifted(sm - dm))
        } else {
            None
        }
    }

    /// Render with a custom variable name (e.g. "z" for Conway data).
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (e, c) in self.coeffs.iter().rev() {
            let first = out.is_empty();
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_str = if mag.is_integer() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            if *e == 0 {
                out.push_str(&coeff_str);
            } else {
                if !mag.is_one() {
                    out.push_str(&coeff_str);
                }
                out.push_str(var);
                if *e != 1 {
                    out.push_str(&format!("^{e}"));
                }
            }
        }
        out
    }
}

fn rational_pow(x: &BigRational, k: u32) -> BigRational {
    let mut out = BigRational::one();
    for _ in 0..k {
        out *= x;
    }
    out
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs = self.coeffs.clone();
        for (e, c) in rhs.terms() {
            let entry = coeffs.entry(e).or_insert_with(BigRational::zero);
            *entry += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs = self.coeffs.clone();
        for (e, c) in rhs.terms() {
            let entry = coeffs.entry(e).or_insert_with(BigRational::zero);
            *entry -= c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                let entry = coeffs.entry(e1 + e2).or_insert_with(BigRational::zero);
                *entry += c1 * c2;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(terms)
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[(1, 2), (-1, 0)]); // t^2 - 1
        let b = p(&[(1, 1), (1, 0)]); // t + 1
        let c = p(&[(1, 1), (-1, 0)]); // t - 1
        assert_eq!(&b * &c, a);
        assert_eq!(&a - &a, LaurentPoly::zero());
        assert_eq!(&a + &(-&a), LaurentPoly::zero());
    }

    #[test]
    fn normal_form_shifts_and_signs() {
        // -t^-2 + t^-1 normalizes to t - 1 ... up to sign: (-1 + t) * t^-2,
        // leading coefficient of t - 1 is positive already.
        let q = p(&[(-1, -2), (1, -1)]);
        assert_eq!(q.normal_form(), p(&[(1, 1), (-1, 0)]));
        // leading negative flips sign
        let r = p(&[(-1, 3), (1, 0)]);
        assert_eq!(r.normal_form(), p(&[(1, 3), (-1, 0)]));
        assert_eq!(LaurentPoly::zero().normal_form(), LaurentPoly::zero());
    }

    #[test]
    fn primitive_normal_form_strips_content() {
        let q = p(&[(4, 5), (6, 3)]); // 4t^5 + 6t^3
        assert_eq!(q.primitive_normal_form(), p(&[(2, 2), (3, 0)]));
        let half = LaurentPoly::term(BigRational::new(BigInt::from(1), BigInt::from(2)), -7);
        assert!(half.primitive_normal_form().is_one());
        assert!(half.is_unit_q());
        assert!(!half.is_unit_int());
    }

    #[test]
    fn reciprocal_mirrors_exponents() {
        let q = p(&[(1, 4), (-1, 2), (1, 0)]);
        assert!(q.reciprocal().eq_up_to_unit(&q));
        let r = p(&[(2, 1), (1, 0)]);
        assert_eq!(r.reciprocal(), p(&[(2, -1), (1, 0)]));
    }

    #[test]
    fn div_rem_and_exact_div() {
        let a = p(&[(1, 3), (-1, 0)]); // t^3 - 1
        let b = p(&[(1, 1), (-1, 0)]); // t - 1
        let (q, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(q, p(&[(1, 2), (1, 1), (1, 0)]));
        let c = p(&[(1, -1), (2, 0)]); // 2 + t^-1
        let prod = &a * &c;
        assert_eq!(prod.exact_div(&c).unwrap(), a);
        assert_eq!(prod.exact_div(&a).unwrap(), c);
        assert!(b.exact_div(&a).is_none());
    }

    #[test]
    fn eval_handles_negative_exponents() {
        let q = p(&[(1, -1), (1, 1)]); // t + 1/t
        let two = BigRational::from_integer(BigInt::from(2));
        assert_eq!(
            q.eval(&two).unwrap(),
            BigRational::new(BigInt::from(5), BigInt::from(2))
        );
        assert!(q.eval(&BigRational::zero()).is_none());
        assert_eq!(
            p(&[(3, 0)]).eval(&BigRational::zero()).unwrap(),
            BigRational::from_integer(BigInt::from(3))
        );
    }

    #[test]
    fn display_golden() {
        assert_eq!(p(&[(1, 4), (-1, 2), (1, 0)]).to_string(), "t^4 - t^2 + 1");
        assert_eq!(p(&[(1, 3), (2, 1)]).display_with("z"), "z^3 + 2z");
        assert_eq!(p(&[(-1, -1), (1, 1)]).to_string(), "t - t^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    proptest! {
        #[test]
        fn normal_form_idempotent_and_multiplicative(
            a in proptest::collection::vec((-4i64..=4, -3i64..=3), 0..6),
            b in proptest::collection::vec((-4i64..=4, -3i64..=3), 0..6),
        ) {
            let pa = LaurentPoly::from_int_terms(&a);
            let pb = LaurentPoly::from_int_terms(&b);
            let nf = pa.normal_form();
            prop_assert_eq!(nf.normal_form(), nf.clone());
            let lhs = (&pa.normal_form() * &pb.normal_form()).normal_form();
            let rhs = (&pa * &pb).normal_form();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn exact_div_recovers_factor(
            a in proptest::collection::vec((-4i64..=4, -3i64..=3), 1..5),
            b in proptest::collection::vec((-4i64..=4, -3i64..=3), 1..5),
        ) {
            let pa = LaurentPoly::from_int_terms(&a);
            let pb = LaurentPoly::from_int_terms(&b);
            prop_assume!(!pa.is_zero() && !pb.is_zero());
            let prod = &pa * &pb;
            prop_assert_eq!(prod.exact_div(&pb).unwrap(), pa);
        }
    }
}
