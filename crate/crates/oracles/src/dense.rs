//! Minimal dense univariate polynomials over the rationals, private to the
//! oracle implementations so they share no polynomial code with the
//! algorithms under test.

use num::{BigInt, BigRational, One, Signed, Zero};

/// c[i] is the coefficient of x^i; no trailing zeros are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly {
    c: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        QPoly { c }
    }

    pub fn zero() -> Self {
        QPoly { c: vec![] }
    }

    pub fn one() -> Self {
        Self::constant_i64(1)
    }

    pub fn constant_i64(v: i64) -> Self {
        Self::new(vec![BigRational::from_integer(BigInt::from(v))])
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.c.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn lead(&self) -> BigRational {
        self.c.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.c.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, o: &QPoly) -> QPoly {
        let n = self.c.len().max(o.c.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &QPoly) -> QPoly {
        let n = self.c.len().max(o.c.len());
        QPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn neg(&self) -> QPoly {
        QPoly::new(self.c.iter().map(|x| -x).collect())
    }

    pub fn mul(&self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut c = vec![BigRational::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        QPoly::new(c)
    }

    pub fn scale(&self, k: &BigRational) -> QPoly {
        QPoly::new(self.c.iter().map(|x| x * k).collect())
    }

    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.c.clone();
        if rem.len() < d.c.len() {
            return (QPoly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - d.c.len() + 1];
        let dl = d.lead();
        for k in (0..quot.len()).rev() {
            let top = rem[k + d.degree()].clone();
            if top.is_zero() {
                continue;
            }
            let f = top / &dl;
            for (i, dc) in d.c.iter().enumerate() {
                rem[k + i] = &rem[k + i] - &(dc * &f);
            }
            quot[k] = f;
        }
        (QPoly::new(quot), QPoly::new(rem))
    }

    pub fn derivative(&self) -> QPoly {
        if self.c.len() <= 1 {
            return QPoly::zero();
        }
        QPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, o: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let lead = a.lead();
            a.scale(&lead.recip())
        }
    }

    /// Yun's squarefree decomposition: returns (g_i, i) with self = lead *
    /// prod g_i^i and every g_i squarefree, pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(QPoly, usize)> {
        assert!(!self.is_zero());
        if self.is_constant() {
            return vec![];
        }
        let mut out = Vec::new();
        let f = {
            let lead = self.lead();
            self.scale(&lead.recip())
        };
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_rem(&a0).0;
        let mut c = df.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1usize;
        while !b.is_constant() {
            let ai = b.gcd(&d);
            if !ai.is_constant() {
                out.push((ai.clone(), i));
            }
            b = b.div_rem(&ai).0;
            c = d.div_rem(&ai).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// Number of trailing zero coefficients = multiplicity of the root 0.
    pub fn root_zero_multiplicity(&self) -> usize {
        self.c.iter().take_while(|c| c.is_zero()).count()
    }

    /// Cauchy bound: every real root lies in (-B, B).
    pub fn cauchy_bound(&self) -> BigRational {
        assert!(!self.is_zero());
        let lead = self.lead().abs();
        let mut m = BigRational::zero();
        for c in &self.c {
            let r = c.abs() / &lead;
            if r > m {
                m = r;
            }
        }
        m + BigRational::one()
    }
}
