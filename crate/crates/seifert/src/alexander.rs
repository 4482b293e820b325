//! Alexander polynomial and the elementary-divisor description of the
//! rational Alexander module, both read off the presentation matrix
//! `A - epsilon * t * A^T`.

use exactalg::{det_laurent, smith_laurent, LaurentPoly, PolyMatrix};
use num::{BigInt, BigRational};

use crate::{FormKind, SeifertError, SeifertForm};

fn require_knot(form: &SeifertForm) -> Result<(), SeifertError> {
    if form.kind() != FormKind::Knot {
        return Err(SeifertError::KindMismatch {
            expected: FormKind::Knot,
            got: form.kind(),
        });
    }
    Ok(())
}

/// Presentation matrix `A - epsilon * t * A^T` over the Laurent ring.
pub fn presentation_matrix(form: &SeifertForm) -> PolyMatrix {
    let a = form.matrix();
    let s = BigInt::from(-form.epsilon().sign());
    PolyMatrix::from_fn(form.rank(), form.rank(), |i, j| {
        let c0 = BigRational::from_integer(a.get(i, j).clone());
        let c1 = BigRational::from_integer(a.get(j, i) * &s);
        &LaurentPoly::term(c0, 0) + &LaurentPoly::term(c1, 1)
    })
}

/// Alexander polynomial: `det(A - epsilon*t*A^T)` in normal form (lowest
/// exponent 0, positive leading coefficient). Valid knot forms give a
/// polynomial with `delta(1) = +-1`.
pub fn alexander(form: &SeifertForm) -> Result<LaurentPoly, SeifertError> {
    require_knot(form)?;
    let d = det_laurent(&presentation_matrix(form)).expect("presentation matrix is square");
    Ok(d.normal_form())
}

/// Non-unit elementary divisors of the presentation matrix over Q[t, 1/t];
/// their product agrees with the Alexander polynomial up to rational units.
pub fn alexander_module(form: &SeifertForm) -> Result<Vec<LaurentPoly>, SeifertError> {
    require_knot(form)?;
    let divisors =
        smith_laurent(&presentation_matrix(form)).expect("presentation matrix is square");
    Ok(divisors.into_iter().filter(|d| !d.is_one()).collect())
}
