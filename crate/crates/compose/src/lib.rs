//! Block constructions on Seifert forms: two-component link presentations,
//! band sums, split unions, negation, doubling, and basis changes.
//!
//! The central shape is the bordered matrix `F = [[A1, B], [eps*B^T, A2]]`.
//! Forcing the lower-left block to `eps*B^T` makes the intersection pairing
//! split exactly: `F - eps*F^T = blockdiag(Q1, Q2)`. That cancellation is
//! what the additivity checks exercise.

use exactalg::{det_int, IntMatrix};
use num::{BigInt, One, Signed};
use seifert::{Epsilon, FormKind, SeifertForm};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComposeError {
    #[error("coupling matrix must be {expected_rows}x{expected_cols}, got {rows}x{cols}")]
    ShapeMismatch {
        expected_rows: usize,
        expected_cols: usize,
        rows: usize,
        cols: usize,
    },
    #[error("component forms must share epsilon")]
    ParityMismatch,
    #[error("operation requires a {expected} form, got {got}")]
    KindMismatch { expected: FormKind, got: FormKind },
    #[error("basis-change matrix must be unimodular, got determinant {0}")]
    NotUnimodular(BigInt),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
}

fn require_knot(form: &SeifertForm) -> Result<(), ComposeError> {
    if form.kind() != FormKind::Knot {
        return Err(ComposeError::KindMismatch {
            expected: FormKind::Knot,
            got: form.kind(),
        });
    }
    Ok(())
}

/// Two knot-kind component forms plus an integer coupling block recording how
/// bands from the first surface link circles of the second.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkPresentation2 {
    comp1: SeifertForm,
    comp2: SeifertForm,
    coupling: IntMatrix,
}

impl LinkPresentation2 {
    pub fn new(
        comp1: SeifertForm,
        comp2: SeifertForm,
        coupling: IntMatrix,
    ) -> Result<Self, ComposeError> {
        require_knot(&comp1)?;
        require_knot(&comp2)?;
        if comp1.epsilon() != comp2.epsilon() {
            return Err(ComposeError::ParityMismatch);
        }
        if coupling.rows() != comp1.rank() || coupling.cols() != comp2.rank() {
            return Err(ComposeError::ShapeMismatch {
                expected_rows: comp1.rank(),
                expected_cols: comp2.rank(),
                rows: coupling.rows(),
                cols: coupling.cols(),
            });
        }
        Ok(LinkPresentation2 {
            comp1,
            comp2,
            coupling,
        })
    }

    pub fn comp1(&self) -> &SeifertForm {
        &self.comp1
    }

    pub fn comp2(&self) -> &SeifertForm {
        &self.comp2
    }

    pub fn coupling(&self) -> &IntMatrix {
        &self.coupling
    }

    pub fn epsilon(&self) -> Epsilon {
        self.comp1.epsilon()
    }
}

/// A link1 form together with independent Seifert data for its two
/// components. The components are separate surfaces; they are not required
/// to appear as sub-blocks of the full matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkPresentation1 {
    full: SeifertForm,
    comp1: SeifertForm,
    comp2: SeifertForm,
}

impl LinkPresentation1 {
    pub fn new(
        full: SeifertForm,
        comp1: SeifertForm,
        comp2: SeifertForm,
    ) -> Result<Self, ComposeError> {
        if full.kind() != FormKind::Link1 {
            return Err(ComposeError::KindMismatch {
                expected: FormKind::Link1,
                got: full.kind(),
            });
        }
        require_knot(&comp1)?;
        require_knot(&comp2)?;
        if [&full, &comp1, &comp2]
            .iter()
            .any(|f| f.epsilon() == Epsilon::Minus)
        {
            return Err(ComposeError::ParityMismatch);
        }
        Ok(LinkPresentation1 { full, comp1, comp2 })
    }

    pub fn full(&self) -> &SeifertForm {
        &self.full
    }

    pub fn comp1(&self) -> &SeifertForm {
        &self.comp1
    }

    pub fn comp2(&self) -> &SeifertForm {
        &self.comp2
    }
}

/// Full bordered matrix `[[A1, B], [eps*B^T, A2]]` as a knot form with the
/// shared epsilon.
pub fn band_sum(p: &LinkPresentation2) -> SeifertForm {
    let eps = p.epsilon();
    let lower_left = p.coupling.transpose().scaled_i64(eps.sign());
    let f = IntMatrix::block2x2(
        p.comp1.matrix(),
        &p.coupling,
        &lower_left,
        p.comp2.matrix(),
    );
    SeifertForm::knot(f, eps)
}

/// Presentation with zero coupling: the split (boundary-link) case.
pub fn split_union(f1: SeifertForm, f2: SeifertForm) -> Result<LinkPresentation2, ComposeError> {
    let coupling = IntMatrix::zeros(f1.rank(), f2.rank());
    LinkPresentation2::new(f1, f2, coupling)
}

/// Mirror form `-A` with the same epsilon and kind.
pub fn negate(form: &SeifertForm) -> SeifertForm {
    SeifertForm::new(form.matrix().scaled_i64(-1), form.epsilon(), form.kind())
}

/// Slice double `blockdiag(A, -A)`: always nullconcordant-looking, with the
/// diagonal subspace as a metabolizer.
pub fn double(form: &SeifertForm) -> Result<SeifertForm, ComposeError> {
    require_knot(form)?;
    let d = IntMatrix::block_diag(form.matrix(), &form.matrix().scaled_i64(-1));
    Ok(SeifertForm::knot(d, form.epsilon()))
}

/// Basis change `P^T A P` for unimodular `P`; every invariant is preserved.
pub fn congruence_transform(
    form: &SeifertForm,
    p: &IntMatrix,
) -> Result<SeifertForm, ComposeError> {
    if !p.is_square() || p.rows() != form.rank() {
        return Err(ComposeError::ShapeMismatch {
            expected_rows: form.rank(),
            expected_cols: form.rank(),
            rows: p.rows(),
            cols: p.cols(),
        });
    }
    let d = det_int(p).expect("basis-change matrix is square");
    if !d.abs().is_one() {
        return Err(ComposeError::NotUnimodular(d));
    }
    let a = p.transpose().matmul(form.matrix()).matmul(p);
    Ok(SeifertForm::new(a, form.epsilon(), form.kind()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactalg::{random_unimodular, LaurentPoly, SplitMix64};
    use seifert::{alexander, arf, signature, validate, Arf};

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows)
    }

    fn knot(rows: &[Vec<i64>], eps: Epsilon) -> SeifertForm {
        SeifertForm::knot(m(rows), eps)
    }

    fn band_pair(eps: Epsilon) -> LinkPresentation2 {
        LinkPresentation2::new(
            knot(&[vec![1, 1], vec![0, 0]], eps),
            knot(&[vec![0, 1], vec![0, 1]], eps),
            m(&[vec![0, 0], vec![1, 0]]),
        )
        .unwrap()
    }

    #[test]
    fn band_sum_golden() {
        let plus = band_sum(&band_pair(Epsilon::Plus));
        assert_eq!(
            plus.matrix(),
            &m(&[
                vec![1, 1, 0, 0],
                vec![0, 0, 1, 0],
                vec![0, 1, 0, 1],
                vec![0, 0, 0, 1],
            ])
        );
        assert!(validate(&plus).is_ok());

        let minus = band_sum(&band_pair(Epsilon::Minus));
        assert_eq!(
            minus.matrix(),
            &m(&[
                vec![1, 1, 0, 0],
                vec![0, 0, 1, 0],
                vec![0, -1, 0, 1],
                vec![0, 0, 0, 1],
            ])
        );
        assert!(validate(&minus).is_ok());
    }

    #[test]
    fn construction_errors() {
        let t = knot(&[vec![-1, 1], vec![0, -1]], Epsilon::Plus);
        let u = knot(&[vec![1, 1], vec![0, 0]], Epsilon::Minus);
        assert_eq!(
            LinkPresentation2::new(t.clone(), u.clone(), IntMatrix::zeros(2, 2)).unwrap_err(),
            ComposeError::ParityMismatch
        );
        assert!(matches!(
            LinkPresentation2::new(t.clone(), t.clone(), IntMatrix::zeros(1, 2)).unwrap_err(),
            ComposeError::ShapeMismatch { .. }
        ));
        let link = SeifertForm::link1(m(&[vec![1]]));
        assert!(matches!(
            LinkPresentation2::new(link.clone(), t.clone(), IntMatrix::zeros(1, 2)).unwrap_err(),
            ComposeError::KindMismatch { .. }
        ));
        assert!(matches!(
            double(&link).unwrap_err(),
            ComposeError::KindMismatch { .. }
        ));
        assert_eq!(
            congruence_transform(&t, &m(&[vec![2, 0], vec![0, 1]])).unwrap_err(),
            ComposeError::NotUnimodular(BigInt::from(2))
        );
        assert!(matches!(
            congruence_transform(&t, &IntMatrix::identity(3)).unwrap_err(),
            ComposeError::ShapeMismatch { .. }
        ));
    }

    #[test]
    fn split_union_is_block_diagonal() {
        let t = knot(&[vec![-1, 1], vec![0, -1]], Epsilon::Plus);
        let p = split_union(t.clone(), t.clone()).unwrap();
        let f = band_sum(&p);
        assert_eq!(
            f.matrix(),
            &IntMatrix::block_diag(t.matrix(), t.matrix())
        );
        assert!(validate(&f).is_ok());

        let empty = SeifertForm::knot(IntMatrix::zeros(0, 0), Epsilon::Plus);
        let p0 = split_union(empty.clone(), empty).unwrap();
        assert_eq!(band_sum(&p0).rank(), 0);
    }

    #[test]
    fn negate_and_double() {
        let t = knot(&[vec![-1, 1], vec![0, -1]], Epsilon::Plus);
        assert_eq!(signature(&negate(&t)), -signature(&t));
        assert_eq!(negate(&negate(&t)), t);

        let d = double(&t).unwrap();
        assert_eq!(d.rank(), 4);
        assert_eq!(signature(&d), 0);
        let tre = LaurentPoly::from_int_terms(&[(1, 2), (-1, 1), (1, 0)]);
        assert!(alexander(&d).unwrap().eq_up_to_unit(&(&tre * &tre)));

        let empty = SeifertForm::knot(IntMatrix::zeros(0, 0), Epsilon::Minus);
        assert_eq!(double(&empty).unwrap().rank(), 0);
    }

    #[test]
    fn identity_transform_is_noop() {
        let t = knot(&[vec![-1, 1], vec![0, -1]], Epsilon::Plus);
        assert_eq!(congruence_transform(&t, &IntMatrix::identity(2)).unwrap(), t);
        let empty = SeifertForm::knot(IntMatrix::zeros(0, 0), Epsilon::Plus);
        let moved = congruence_transform(&empty, &IntMatrix::identity(0)).unwrap();
        assert_eq!(moved.rank(), 0);
    }

    fn random_knot(rng: &mut SplitMix64, eps: Epsilon) -> SeifertForm {
        let pieces = match eps {
            Epsilon::Plus => [
                m(&[vec![-1, 1], vec![0, -1]]),
                m(&[vec![1, 1], vec![0, 0]]),
                m(&[vec![0, 1], vec![0, 1]]),
            ],
            Epsilon::Minus => [
                m(&[vec![1, 1], vec![0, 0]]),
                m(&[vec![0, 1], vec![0, 1]]),
                m(&[vec![1, 0], vec![1, 0]]),
            ],
        };
        let mut a = IntMatrix::zeros(0, 0);
        for _ in 0..(1 + rng.below(2)) {
            a = IntMatrix::block_diag(&a, &pieces[rng.below(3) as usize]);
        }
        let p = random_unimodular(a.rows(), rng.next_u64());
        SeifertForm::knot(p.transpose().matmul(&a).matmul(&p), eps)
    }

    fn random_presentation(rng: &mut SplitMix64, eps: Epsilon) -> LinkPresentation2 {
        let f1 = random_knot(rng, eps);
        let f2 = random_knot(rng, eps);
        let mut b = IntMatrix::zeros(f1.rank(), f2.rank());
        for i in 0..f1.rank() {
            for j in 0..f2.rank() {
                b.set(i, j, rng.int_in(-3, 3).into());
            }
        }
        LinkPresentation2::new(f1, f2, b).unwrap()
    }

    #[test]
    fn intersection_pairing_splits() {
        let mut rng = SplitMix64::new(88);
        for trial in 0..60 {
            let eps = if trial % 2 == 0 { Epsilon::Plus } else { Epsilon::Minus };
            let p = random_presentation(&mut rng, eps);
            let f = band_sum(&p);
            let expected = IntMatrix::block_diag(
                &p.comp1().intersection_form(),
                &p.comp2().intersection_form(),
            );
            assert_eq!(f.intersection_form(), expected);
            assert!(validate(&f).is_ok());
        }
    }

    #[test]
    fn arf_adds_over_band_sums() {
        let mut rng = SplitMix64::new(17);
        for _ in 0..100 {
            let p = random_presentation(&mut rng, Epsilon::Plus);
            let whole = arf(&band_sum(&p)).unwrap();
            let parts = arf(p.comp1()).unwrap().xor(arf(p.comp2()).unwrap());
            assert_eq!(whole, parts);
            assert_ne!(whole, Arf::Undefined);
        }
    }

    #[test]
    fn signature_adds_over_band_sums() {
        let mut rng = SplitMix64::new(18);
        for _ in 0..100 {
            let p = random_presentation(&mut rng, Epsilon::Minus);
            let whole = signature(&band_sum(&p));
            assert_eq!(whole, signature(p.comp1()) + signature(p.comp2()));
        }
    }

    #[test]
    fn alexander_multiplies_at_zero_coupling() {
        let mut rng = SplitMix64::new(19);
        for trial in 0..40 {
            let eps = if trial % 2 == 0 { Epsilon::Plus } else { Epsilon::Minus };
            let f1 = random_knot(&mut rng, eps);
            let f2 = random_knot(&mut rng, eps);
            let d1 = alexander(&f1).unwrap();
            let d2 = alexander(&f2).unwrap();
            let whole = alexander(&band_sum(&split_union(f1, f2).unwrap())).unwrap();
            assert!(whole.eq_up_to_unit(&(&d1 * &d2)));
        }
    }

    #[test]
    fn invariants_survive_basis_change() {
        let mut rng = SplitMix64::new(20);
        for _ in 0..40 {
            let f = random_knot(&mut rng, Epsilon::Plus);
            let p = random_unimodular(f.rank(), rng.next_u64());
            let g = congruence_transform(&f, &p).unwrap();
            assert_eq!(signature(&f), signature(&g));
            assert_eq!(arf(&f).unwrap(), arf(&g).unwrap());
            assert!(alexander(&f).unwrap().eq_up_to_unit(&alexander(&g).unwrap()));
        }
    }
}
