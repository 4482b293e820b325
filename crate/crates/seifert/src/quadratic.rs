//! The mod-2 quadratic refinement of the intersection pairing and the Arf
//! invariant it induces.

use std::fmt;

use exactalg::{gf2_radical, symplectic_decompose, GF2Matrix, GF2Vec, IntMatrix};
use num::Integer;

use crate::{Epsilon, SeifertError, SeifertForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arf {
    Zero,
    One,
    /// The refinement does not vanish on the radical of the pairing, so no
    /// basis-independent value exists (odd-linking 1-link case).
    Undefined,
}

impl Arf {
    pub fn bit(self) -> Option<u8> {
        match self {
            Arf::Zero => Some(0),
            Arf::One => Some(1),
            Arf::Undefined => None,
        }
    }

    pub fn from_bit(b: u8) -> Arf {
        match b % 2 {
            0 => Arf::Zero,
            _ => Arf::One,
        }
    }

    /// Mod-2 sum; Undefined absorbs.
    pub fn xor(self, other: Arf) -> Arf {
        match (self.bit(), other.bit()) {
            (Some(a), Some(b)) => Arf::from_bit(a ^ b),
            _ => Arf::Undefined,
        }
    }
}

impl fmt::Display for Arf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Arf::Zero => "0",
            Arf::One => "1",
            Arf::Undefined => "undefined",
        })
    }
}

/// GF(2) vector space with the alternating pairing `J = (A + A^T) mod 2` and
/// the quadratic function `q(v) = v^T A v mod 2`. The diagonal of `A` fixes
/// `q` on basis vectors; the refinement law `q(u+v) = q(u)+q(v)+J(u,v)`
/// extends it to every vector, which is exactly what `eval` computes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GF2QuadraticSpace {
    j: GF2Matrix,
    diag: Vec<u8>,
}

impl GF2QuadraticSpace {
    pub fn from_seifert_matrix(a: &IntMatrix) -> Self {
        assert!(a.is_square(), "Seifert matrix must be square");
        let n = a.rows();
        let mut j = GF2Matrix::zeros(n, n);
        let mut diag = vec![0u8; n];
        for i in 0..n {
            diag[i] = if a.get(i, i).is_odd() { 1 } else { 0 };
            for k in (i + 1)..n {
                let b = if (a.get(i, k) + a.get(k, i)).is_odd() { 1 } else { 0 };
                j.set(i, k, b);
                j.set(k, i, b);
            }
        }
        GF2QuadraticSpace { j, diag }
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn pairing(&self) -> &GF2Matrix {
        &self.j
    }

    /// `q(v) = sum of diag over set bits + sum of J over set-bit pairs`.
    pub fn eval(&self, v: &GF2Vec) -> u8 {
        assert_eq!(v.len(), self.dim());
        let mut q = 0u8;
        for i in 0..v.len() {
            if v.get(i) == 0 {
                continue;
            }
            q ^= self.diag[i];
            for k in (i + 1)..v.len() {
                if v.get(k) == 1 {
                    q ^= self.j.get(i, k);
                }
            }
        }
        q
    }

    /// Refinement law `q(u+v)+q(u)+q(v) = J(u,v)`; holds for every pair.
    pub fn refinement_law_holds(&self, u: &GF2Vec, v: &GF2Vec) -> bool {
        self.eval(&u.xored(v)) ^ self.eval(u) ^ self.eval(v) == self.j.pair(u, v)
    }
}

/// Arf invariant of an epsilon +1 form: Undefined when `q` is nonzero
/// somewhere on the radical of the pairing, otherwise the sum of
/// `q(x_i)q(y_i)` over a symplectic basis of the quotient.
pub fn arf(form: &SeifertForm) -> Result<Arf, SeifertError> {
    if form.epsilon() == Epsilon::Minus {
        return Err(SeifertError::WrongParity);
    }
    if form.rank() == 0 {
        return Ok(Arf::Zero);
    }
    let space = GF2QuadraticSpace::from_seifert_matrix(form.matrix());
    let radical = gf2_radical(space.pairing()).expect("pairing is alternating by construction");
    if radical.iter().any(|r| space.eval(r) == 1) {
        return Ok(Arf::Undefined);
    }
    let decomp =
        symplectic_decompose(space.pairing()).expect("pairing is alternating by construction");
    let mut acc = 0u8;
    for (x, y) in &decomp.pairs {
        acc ^= space.eval(x) & space.eval(y);
    }
    Ok(Arf::from_bit(acc))
}
