//! Exact factorization of integer polynomials into irreducibles over the
//! rationals, by Kronecker interpolation: a degree-d divisor of f takes
//! divisor values g(x_i) | f(x_i) at d+1 integer nodes, so enumerating value
//! tuples and interpolating finds every divisor. Divided differences of an
//! integer polynomial at integer nodes are integers, which prunes the
//! enumeration early. Intended for the small degrees (<= 10) the Fox-Milnor
//! test needs.

use num::{BigInt, Integer, One, Signed, Zero};

/// Dense integer polynomial, constant term first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ZPoly {
    c: Vec<BigInt>,
}

impl ZPoly {
    pub fn from_coeffs(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        ZPoly { c }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.c.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn content(&self) -> BigInt {
        self.c.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Content stripped, leading coefficient positive.
    pub fn primitive_positive(&self) -> Self {
        assert!(!self.is_zero());
        let mut content = self.content();
        if self.c.last().unwrap().is_negative() {
            content = -content;
        }
        ZPoly {
            c: self.c.iter().map(|x| x / &content).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return ZPoly { c: Vec::new() };
        }
        let mut c = vec![BigInt::zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in other.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        ZPoly::from_coeffs(c)
    }

    /// Quotient when `d` divides exactly over the integers, else None.
    pub fn try_exact_div(&self, d: &Self) -> Option<ZPoly> {
        assert!(!d.is_zero());
        if self.is_zero() {
            return Some(ZPoly { c: Vec::new() });
        }
        if self.degree() < d.degree() {
            return None;
        }
        let lead = d.c.last().unwrap();
        let mut rem = self.c.clone();
        let mut quot = vec![BigInt::zero(); self.degree() - d.degree() + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + d.degree()].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.c.iter().enumerate() {
                rem[k + j] -= &q * dc;
            }
            quot[k] = q;
        }
        if rem.iter().all(|x| x.is_zero()) {
            Some(ZPoly::from_coeffs(quot))
        } else {
            None
        }
    }

    /// `t^deg * p(1/t)` with canonical sign and content: the mate a factor
    /// must pair with under the reciprocality condition.
    pub fn reciprocal_normalized(&self) -> Self {
        assert!(!self.is_zero());
        let mut c = self.c.clone();
        c.reverse();
        ZPoly::from_coeffs(c).primitive_positive()
    }
}

/// Interpolation nodes 0, 1, -1, 2, -2, ...
fn nodes(count: usize) -> Vec<BigInt> {
    (0..count as i64)
        .map(|k| BigInt::from(if k % 2 == 1 { k / 2 + 1 } else { -k / 2 }))
        .collect()
}

/// All divisors of a nonzero integer, both signs unless `positive_only`.
fn divisors(v: &BigInt, positive_only: bool) -> Vec<BigInt> {
    let a = v.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= a {
        if (&a % &d).is_zero() {
            small.push(d.clone());
            let e = &a / &d;
            if e != d {
                large.push(e);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    if !positive_only {
        let negs: Vec<BigInt> = small.iter().map(|x| -x).collect();
        small.extend(negs);
    }
    small
}

/// Newton-form polynomial from coefficients c_k and nodes x_j:
/// sum of c_k * prod_{j<k} (t - x_j).
fn newton_to_poly(coeffs: &[BigInt], xs: &[BigInt]) -> ZPoly {
    let mut acc = ZPoly { c: Vec::new() };
    let mut basis = ZPoly::from_coeffs(vec![BigInt::one()]);
    for (k, c) in coeffs.iter().enumerate() {
        let term = ZPoly {
            c: basis.c.iter().map(|b| b * c).collect(),
        };
        let len = acc.c.len().max(term.c.len());
        let mut sum = vec![BigInt::zero(); len];
        for (i, v) in acc.c.iter().enumerate() {
            sum[i] += v;
        }
        for (i, v) in term.c.iter().enumerate() {
            sum[i] += v;
        }
        acc = ZPoly::from_coeffs(sum);
        basis = basis.mul(&ZPoly::from_coeffs(vec![-&xs[k], BigInt::one()]));
    }
    acc
}

/// Depth-first enumeration of divisor value tuples. `rows[k]` holds the
/// divided differences [x_i..x_k]g for i = 0..=k; every entry must stay an
/// integer, which kills most branches immediately.
fn search_values(
    f: &ZPoly,
    d: usize,
    xs: &[BigInt],
    values: &[BigInt],
    newton: &mut Vec<BigInt>,
    prev_row: &[BigInt],
) -> Option<ZPoly> {
    let k = newton.len();
    if k == d + 1 {
        if newton[d].is_zero() {
            return None;
        }
        let g = newton_to_poly(newton, xs);
        return f.try_exact_div(&g).map(|_| g.primitive_positive());
    }
    for choice in divisors(&values[k], k == 0) {
        // build row k of the divided-difference triangle, pruning on any
        // non-integer quotient
        let mut row = vec![choice.clone()];
        let mut ok = true;
        for i in (0..k).rev() {
            let num = row.last().unwrap() - &prev_row[i];
            let den = &xs[k] - &xs[i];
            let (q, r) = num.div_rem(&den);
            if !r.is_zero() {
                ok = false;
                break;
            }
            row.push(q);
        }
        if !ok {
            continue;
        }
        newton.push(row.last().unwrap().clone());
        row.reverse();
        if let Some(g) = search_values(f, d, xs, values, newton, &row) {
            return Some(g);
        }
        newton.pop();
    }
    None
}

/// Some degree-d divisor of f (d >= 1), or None if none exists. Assumes f
/// is primitive of degree >= 2d is not required; any nonconstant f works.
fn find_divisor(f: &ZPoly, d: usize) -> Option<ZPoly> {
    let xs = nodes(d + 1);
    for x in &xs {
        if f.eval_int(x).is_zero() {
            return Some(ZPoly::from_coeffs(vec![-x, BigInt::one()]));
        }
    }
    let values: Vec<BigInt> = xs.iter().map(|x| f.eval_int(x)).collect();
    let mut newton = Vec::new();
    search_values(f, d, &xs, &values, &mut newton, &[])
}

/// Irreducible factors of a primitive polynomial, each primitive with
/// positive leading coefficient, with multiplicity. The product recovers f
/// up to sign.
pub(crate) fn factor_primitive(f: &ZPoly) -> Vec<ZPoly> {
    let mut rem = f.clone();
    let mut out = Vec::new();
    'outer: while rem.degree() >= 1 {
        for d in 1..=rem.degree() / 2 {
            if let Some(g) = find_divisor(&rem, d) {
                let g = g.primitive_positive();
                rem = rem.try_exact_div(&g).expect("found divisor divides");
                out.push(g);
                continue 'outer;
            }
        }
        out.push(rem.primitive_positive());
        break;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> ZPoly {
        ZPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn division_and_multiplication() {
        let a = p(&[1, -1, 1]);
        let b = p(&[2, 1]);
        let prod = a.mul(&b);
        assert_eq!(prod, p(&[2, -1, 1, 1]));
        assert_eq!(prod.try_exact_div(&b), Some(a.clone()));
        assert_eq!(prod.try_exact_div(&p(&[1, 1])), None);
        assert_eq!(a.try_exact_div(&p(&[3])), None);
    }

    #[test]
    fn reciprocal_mate() {
        assert_eq!(p(&[2, -3, 1]).reciprocal_normalized(), p(&[1, -3, 2]));
        assert_eq!(p(&[1, -1, 1]).reciprocal_normalized(), p(&[1, -1, 1]));
        assert_eq!(p(&[-1, 2]).reciprocal_normalized(), p(&[-2, 1]));
    }

    #[test]
    fn factors_of_products() {
        // (t^2 - t + 1)(t + 2), mixed-degree split
        let f = p(&[1, -1, 1]).mul(&p(&[2, 1]));
        let factors = factor_primitive(&f);
        assert_eq!(factors.len(), 2);
        assert!(factors.contains(&p(&[1, -1, 1])));
        assert!(factors.contains(&p(&[2, 1])));

        // square of an irreducible quadratic
        let g = p(&[1, -1, 1]).mul(&p(&[1, -1, 1]));
        assert_eq!(factor_primitive(&g), vec![p(&[1, -1, 1]), p(&[1, -1, 1])]);

        // rational (non-integer) root: (2t - 1)(t - 3)
        let h = p(&[-1, 2]).mul(&p(&[-3, 1]));
        let factors = factor_primitive(&h);
        assert_eq!(factors.len(), 2);
        assert!(factors.contains(&p(&[-1, 2])));
        assert!(factors.contains(&p(&[-3, 1])));
    }

    #[test]
    fn irreducibles_stay_whole() {
        assert_eq!(factor_primitive(&p(&[1, -1, 1])), vec![p(&[1, -1, 1])]);
        // t^4 - t^2 + 1, the 12th cyclotomic polynomial
        let c12 = p(&[1, 0, -1, 0, 1]);
        assert_eq!(factor_primitive(&c12), vec![c12.clone()]);
        // linear
        assert_eq!(factor_primitive(&p(&[5, 1])), vec![p(&[5, 1])]);
    }

    #[test]
    fn cyclotomic_like_products() {
        // (t^2+1)(t^2+t+1)(t-1): distinct irreducibles across degrees
        let f = p(&[1, 0, 1]).mul(&p(&[1, 1, 1])).mul(&p(&[-1, 1]));
        let factors = factor_primitive(&f);
        assert_eq!(factors.len(), 3);
        assert!(factors.contains(&p(&[1, 0, 1])));
        assert!(factors.contains(&p(&[1, 1, 1])));
        assert!(factors.contains(&p(&[-1, 1])));
    }

    #[test]
    fn degree_zero_input() {
        assert!(factor_primitive(&p(&[1])).is_empty());
        assert!(factor_primitive(&p(&[-1])).is_empty());
    }
}
