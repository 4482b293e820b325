//! Ribbon obstruction: the rational Alexander module of a ribbon form is
//! torsion-free in the presented degree, so any non-unit elementary divisor
//! of `A - epsilon*t*A^T` obstructs ribbonness.

use exactalg::LaurentPoly;
use seifert::{alexander_module, SeifertForm};

use crate::{require_knot, ObstructError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionVerdict {
    pub obstructed: bool,
    pub non_unit_divisors: Vec<LaurentPoly>,
}

pub fn ribbon_obstruction(form: &SeifertForm) -> Result<ObstructionVerdict, ObstructError> {
    require_knot(form)?;
    let non_unit_divisors = alexander_module(form).expect("kind checked above");
    Ok(ObstructionVerdict {
        obstructed: !non_unit_divisors.is_empty(),
        non_unit_divisors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use compose::double;
    use exactalg::IntMatrix;
    use seifert::{alexander, Epsilon};

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows)
    }

    #[test]
    fn rank_zero_is_unobstructed() {
        let empty = SeifertForm::knot(IntMatrix::zeros(0, 0), Epsilon::Plus);
        let v = ribbon_obstruction(&empty).unwrap();
        assert!(!v.obstructed);
        assert!(v.non_unit_divisors.is_empty());
    }

    #[test]
    fn torsion_obstructs_and_survives_doubling() {
        let x = SeifertForm::knot(
            m(&[
                vec![1, 1, 0, 0],
                vec![0, 0, 1, 0],
                vec![0, -1, 0, 1],
                vec![0, 0, 0, 1],
            ]),
            Epsilon::Minus,
        );
        let v = ribbon_obstruction(&x).unwrap();
        assert!(v.obstructed);
        assert_eq!(v.non_unit_divisors.len(), 1);
        assert!(v.non_unit_divisors[0]
            .eq_up_to_q_unit(&LaurentPoly::from_int_terms(&[(1, 4), (-1, 2), (1, 0)])));

        // the double is a slice form but keeps its torsion
        let p = double(&x).unwrap();
        assert!(ribbon_obstruction(&p).unwrap().obstructed);
    }

    #[test]
    fn obstruction_tracks_polynomial_degree() {
        let forms = [
            SeifertForm::knot(m(&[vec![-1, 1], vec![0, -1]]), Epsilon::Plus),
            SeifertForm::knot(m(&[vec![1, 1], vec![0, 0]]), Epsilon::Plus),
            SeifertForm::knot(m(&[vec![0, 1], vec![0, 1]]), Epsilon::Plus),
        ];
        for f in &forms {
            let v = ribbon_obstruction(f).unwrap();
            let degree = alexander(f).unwrap().span_degree();
            assert_eq!(v.obstructed, degree > 0);
        }
    }
}
