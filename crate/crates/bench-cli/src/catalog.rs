//! Built-in worked examples: small named forms and link presentations with
//! known invariants, used as CLI inputs and as fixed points for the check
//! suites. Every entry is validated when the catalog is built.

use compose::{band_sum, double, LinkPresentation1, LinkPresentation2};
use exactalg::IntMatrix;
use seifert::{validate, Epsilon, FormKind, SeifertForm};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog name {0:?} (see `sfm catalog list`)")]
    UnknownName(String),
}

/// The value a catalog entry or an .sfm file denotes: a bare form, a
/// two-surface presentation joined by a coupling block, or a link1 form with
/// separate Seifert data for each component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Form(SeifertForm),
    Link2(LinkPresentation2),
    Link1(LinkPresentation1),
}

impl Payload {
    pub fn epsilon(&self) -> Epsilon {
        match self {
            Payload::Form(f) => f.epsilon(),
            Payload::Link2(p) => p.epsilon(),
            Payload::Link1(p) => p.full().epsilon(),
        }
    }

    /// The single form the payload stands for: link2 presentations collapse
    /// to their band sum, link1 presentations to the full form.
    pub fn underlying_form(&self) -> SeifertForm {
        match self {
            Payload::Form(f) => f.clone(),
            Payload::Link2(p) => band_sum(p),
            Payload::Link1(p) => p.full().clone(),
        }
    }

    pub fn kind_label(&self) -> &'static str {
        match self {
            Payload::Form(f) => match f.kind() {
                FormKind::Knot => "knot",
                FormKind::Link1 => "link1",
            },
            Payload::Link2(_) => "link2",
            Payload::Link1(_) => "link1",
        }
    }
}

/// Structural violations of a payload: each constituent form is checked
/// against its kind's conditions.
pub fn payload_violations(payload: &Payload) -> Vec<String> {
    let mut out = Vec::new();
    let mut push_all = |label: &str, form: &SeifertForm| {
        for v in validate(form).violations() {
            out.push(if label.is_empty() {
                v.clone()
            } else {
                format!("{label}: {v}")
            });
        }
    };
    match payload {
        Payload::Form(f) => push_all("", f),
        Payload::Link2(p) => {
            push_all("component 1", p.comp1());
            push_all("component 2", p.comp2());
            push_all("band sum", &band_sum(p));
        }
        Payload::Link1(p) => {
            push_all("full form", p.full());
            push_all("component 1", p.comp1());
            push_all("component 2", p.comp2());
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub note: &'static str,
    pub payload: Payload,
}

fn m(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_i64_rows(rows)
}

fn summand1(epsilon: Epsilon) -> SeifertForm {
    SeifertForm::knot(m(&[vec![1, 1], vec![0, 0]]), epsilon)
}

fn summand2(epsilon: Epsilon) -> SeifertForm {
    SeifertForm::knot(m(&[vec![0, 1], vec![0, 1]]), epsilon)
}

fn sample_band(epsilon: Epsilon) -> LinkPresentation2 {
    let coupling = m(&[vec![0, 0], vec![1, 0]]);
    LinkPresentation2::new(summand1(epsilon), summand2(epsilon), coupling)
        .expect("summands share epsilon and the coupling is 2x2")
}

fn twisted4() -> SeifertForm {
    SeifertForm::knot(
        m(&[
            vec![1, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, -1, 0, 1],
            vec![0, 0, 0, 1],
        ]),
        Epsilon::Minus,
    )
}

fn empty_knot() -> SeifertForm {
    SeifertForm::knot(IntMatrix::zeros(0, 0), Epsilon::Plus)
}

/// All built-in entries, in a fixed order. Panics if any entry fails
/// validation, so a bad edit here is caught immediately.
pub fn catalog() -> Vec<CatalogEntry> {
    let torus24_full = SeifertForm::link1(m(&[vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]]));
    let entries = vec![
        CatalogEntry {
            name: "prop91_L1",
            note: "rank-2 knot form [[1,1],[0,0]]: unknotted-circle band with a clasp; Arf 0",
            payload: Payload::Form(summand1(Epsilon::Plus)),
        },
        CatalogEntry {
            name: "prop91_L2",
            note: "rank-2 knot form [[0,1],[0,1]]: mirror-flavoured clasp band; Arf 0",
            payload: Payload::Form(summand2(Epsilon::Plus)),
        },
        CatalogEntry {
            name: "prop91_K",
            note: "band sum of prop91_L1 and prop91_L2 over coupling [[0,0],[1,0]]; det(A+A^T) = -15, signature 2",
            payload: Payload::Link2(sample_band(Epsilon::Plus)),
        },
        CatalogEntry {
            name: "prop92_K",
            note: "same summands and coupling with epsilon -1; Alexander polynomial t^4 - t^2 + 1 fails the factorization test",
            payload: Payload::Link2(sample_band(Epsilon::Minus)),
        },
        CatalogEntry {
            name: "thm10_X",
            note: "the prop92_K band-sum matrix as a single epsilon -1 knot form; signature 0 yet not slice",
            payload: Payload::Form(twisted4()),
        },
        CatalogEntry {
            name: "thm10_P",
            note: "double of thm10_X (block sum with its negative): metabolizer exists but the Alexander module obstructs ribbonness",
            payload: Payload::Form(double(&twisted4()).expect("thm10_X is a knot form")),
        },
        CatalogEntry {
            name: "hopf",
            note: "rank-1 link1 form [[1]]: two fibres of the Hopf map, linking number 1, Arf undefined",
            payload: Payload::Form(SeifertForm::link1(m(&[vec![1]]))),
        },
        CatalogEntry {
            name: "trefoil",
            note: "rank-2 knot form [[-1,1],[0,-1]]: signature -2, Arf 1, Alexander polynomial t^2 - t + 1",
            payload: Payload::Form(SeifertForm::knot(
                m(&[vec![-1, 1], vec![0, -1]]),
                Epsilon::Plus,
            )),
        },
        CatalogEntry {
            name: "torus24",
            note: "rank-3 link1 form of the (2,4) torus link with unknotted (rank-0) components; linking number 2",
            payload: Payload::Link1(
                LinkPresentation1::new(torus24_full, empty_knot(), empty_knot())
                    .expect("full form is link1 and components are knots"),
            ),
        },
    ];
    for entry in &entries {
        let violations = payload_violations(&entry.payload);
        assert!(
            violations.is_empty(),
            "catalog entry {} is invalid: {violations:?}",
            entry.name
        );
    }
    entries
}

pub fn catalog_get(name: &str) -> Result<CatalogEntry, CatalogError> {
    catalog()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CatalogError::UnknownName(name.to_string()))
}
