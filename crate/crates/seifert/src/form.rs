//! The SeifertForm domain type, validation diagnostics, and the signature
//! invariant.

use std::fmt;
use std::str::FromStr;

use exactalg::{det_int, inertia, IntMatrix};
use num::{BigInt, One, Signed};

/// Sign of the transpose term in the intersection pairing `A - epsilon*A^T`.
/// `Plus` covers ambient dimensions 1 mod 4 (and the classical dimension 3
/// picture), `Minus` covers dimensions 3 mod 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Epsilon {
    Plus,
    Minus,
}

impl Epsilon {
    pub fn sign(self) -> i64 {
        match self {
            Epsilon::Plus => 1,
            Epsilon::Minus => -1,
        }
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Epsilon::Plus => "+1",
            Epsilon::Minus => "-1",
        })
    }
}

impl FromStr for Epsilon {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "+1" | "1" => Ok(Epsilon::Plus),
            "-1" => Ok(Epsilon::Minus),
            other => Err(format!("epsilon must be +1 or -1, got {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormKind {
    /// Single sphere component: unimodular intersection pairing.
    Knot,
    /// Sphere plus one extra circle factor: odd rank, corank-1 mod-2 pairing.
    Link1,
}

impl fmt::Display for FormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormKind::Knot => "knot",
            FormKind::Link1 => "link1",
        })
    }
}

impl FromStr for FormKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "knot" => Ok(FormKind::Knot),
            "link1" => Ok(FormKind::Link1),
            other => Err(format!("kind must be knot or link1, got {other:?}")),
        }
    }
}

/// A Seifert matrix with its parity sign and kind tag. Entry (i,j) records
/// the linking of basis curve i with the pushoff of curve j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertForm {
    a: IntMatrix,
    epsilon: Epsilon,
    kind: FormKind,
}

impl SeifertForm {
    /// Wraps a square matrix; structural conditions are reported by
    /// [`validate`], not enforced here.
    pub fn new(a: IntMatrix, epsilon: Epsilon, kind: FormKind) -> Self {
        assert!(a.is_square(), "Seifert matrix must be square");
        SeifertForm { a, epsilon, kind }
    }

    pub fn knot(a: IntMatrix, epsilon: Epsilon) -> Self {
        Self::new(a, epsilon, FormKind::Knot)
    }

    pub fn link1(a: IntMatrix) -> Self {
        Self::new(a, Epsilon::Plus, FormKind::Link1)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.a
    }

    pub fn epsilon(&self) -> Epsilon {
        self.epsilon
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.a.rows()
    }

    /// Intersection pairing `Q = A - epsilon * A^T`.
    pub fn intersection_form(&self) -> IntMatrix {
        self.a.sub(&self.a.transpose().scaled_i64(self.epsilon.sign()))
    }

    /// Symmetrized matrix `A + A^T`, the input to the signature.
    pub fn symmetrized(&self) -> IntMatrix {
        self.a.add(&self.a.transpose())
    }
}

/// Outcome of [`validate`]: empty means the form satisfies its kind's
/// structural conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostics {
    violations: Vec<String>,
}

impl Diagnostics {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[String] {
        &self.violations
    }
}

/// Checks the kind-specific structure: knots need a unimodular intersection
/// pairing, link1 forms need epsilon +1, odd rank, and mod-2 corank 1.
pub fn validate(form: &SeifertForm) -> Diagnostics {
    let mut violations = Vec::new();
    let q = form.intersection_form();
    match form.kind() {
        FormKind::Knot => {
            let d = det_int(&q).expect("intersection form is square");
            if !d.abs().is_one() {
                violations.push(format!(
                    "knot form needs |det(A - ({})A^T)| = 1, got determinant {d}",
                    form.epsilon()
                ));
            }
        }
        FormKind::Link1 => {
            if form.epsilon() == Epsilon::Minus {
                violations.push("link1 form needs epsilon +1, got -1".to_string());
            }
            if form.rank() % 2 == 0 {
                violations.push(format!("link1 form needs odd rank, got {}", form.rank()));
            }
            let corank = form.rank() - q.mod2().rank();
            if corank != 1 {
                violations.push(format!(
                    "link1 intersection pairing needs mod-2 corank 1, got {corank}"
                ));
            }
        }
    }
    Diagnostics { violations }
}

/// Signature of the symmetrized matrix `A + A^T`.
pub fn signature(form: &SeifertForm) -> i64 {
    inertia(&form.symmetrized())
        .expect("symmetrized matrix is symmetric")
        .signature()
}

/// Determinant of the symmetrized matrix, handy for quick sanity checks.
pub fn symmetrized_determinant(form: &SeifertForm) -> BigInt {
    det_int(&form.symmetrized()).expect("symmetrized matrix is square")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows)
    }

    #[test]
    fn validate_golden() {
        let ok = SeifertForm::knot(m(&[vec![1, 1], vec![0, 0]]), Epsilon::Plus);
        assert!(validate(&ok).is_ok());

        let bad = SeifertForm::knot(m(&[vec![2]]), Epsilon::Minus);
        let diag = validate(&bad);
        assert!(!diag.is_ok());
        assert!(diag.violations()[0].contains("determinant 4"));

        let link = SeifertForm::link1(m(&[vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]]));
        assert!(validate(&link).is_ok());

        let even = SeifertForm::link1(m(&[vec![0, 1], vec![0, 0]]));
        assert!(!validate(&even).is_ok());
    }

    #[test]
    fn signature_golden() {
        let empty = SeifertForm::knot(IntMatrix::zeros(0, 0), Epsilon::Plus);
        assert_eq!(signature(&empty), 0);

        let band4 = SeifertForm::knot(
            m(&[
                vec![1, 1, 0, 0],
                vec![0, 0, 1, 0],
                vec![0, 1, 0, 1],
                vec![0, 0, 0, 1],
            ]),
            Epsilon::Plus,
        );
        assert_eq!(signature(&band4), 2);
        assert_eq!(symmetrized_determinant(&band4), BigInt::from(-15));

        let twisted4 = SeifertForm::knot(
            m(&[
                vec![1, 1, 0, 0],
                vec![0, 0, 1, 0],
                vec![0, -1, 0, 1],
                vec![0, 0, 0, 1],
            ]),
            Epsilon::Minus,
        );
        assert!(validate(&twisted4).is_ok());
        assert_eq!(signature(&twisted4), 0);

        let trefoil = SeifertForm::knot(m(&[vec![-1, 1], vec![0, -1]]), Epsilon::Plus);
        assert_eq!(signature(&trefoil), -2);
    }

    #[test]
    fn epsilon_and_kind_round_trip() {
        assert_eq!("+1".parse::<Epsilon>().unwrap(), Epsilon::Plus);
        assert_eq!("-1".parse::<Epsilon>().unwrap(), Epsilon::Minus);
        assert_eq!(Epsilon::Minus.to_string(), "-1");
        assert!("0".parse::<Epsilon>().is_err());
        assert_eq!("link1".parse::<FormKind>().unwrap(), FormKind::Link1);
        assert_eq!(FormKind::Knot.to_string(), "knot");
        assert!("link2".parse::<FormKind>().is_err());
    }

    #[test]
    fn intersection_form_uses_epsilon() {
        let a = m(&[vec![1, 1], vec![0, 0]]);
        let plus = SeifertForm::knot(a.clone(), Epsilon::Plus);
        assert_eq!(plus.intersection_form(), m(&[vec![0, 1], vec![-1, 0]]));
        let minus = SeifertForm::knot(a, Epsilon::Minus);
        assert_eq!(minus.intersection_form(), m(&[vec![2, 1], vec![1, 0]]));
    }
}
