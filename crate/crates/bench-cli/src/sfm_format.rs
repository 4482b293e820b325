//! The `.sfm` text format: UTF-8, line oriented, `#` starts a comment. A
//! file carries one payload; the link2 layout stores only the upper coupling
//! block, so presentations with an inconsistent lower-left block cannot even
//! be written down. `parse_sfm` inverts `write_sfm` exactly on canonical
//! files.

use std::fmt::Write as _;

use compose::{LinkPresentation1, LinkPresentation2};
use exactalg::IntMatrix;
use num::BigInt;
use seifert::{Epsilon, FormKind, SeifertForm};
use thiserror::Error;

use crate::catalog::{payload_violations, Payload};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SfmError {
    #[error("line {line}: {msg}")]
    SyntaxError { line: usize, msg: String },
    #[error("invalid payload: {detail}")]
    ValidationError { detail: String },
}

fn syntax(line: usize, msg: impl Into<String>) -> SfmError {
    SfmError::SyntaxError {
        line,
        msg: msg.into(),
    }
}

fn validation(detail: impl Into<String>) -> SfmError {
    SfmError::ValidationError {
        detail: detail.into(),
    }
}

/// Comment-stripped, non-blank lines with their 1-based line numbers.
struct Records<'a> {
    items: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
    end_line: usize,
}

impl<'a> Records<'a> {
    fn new(text: &'a str) -> Self {
        let mut items = Vec::new();
        let mut end_line = 1;
        for (i, raw) in text.lines().enumerate() {
            end_line = i + 2;
            let body = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = body.split_whitespace().collect();
            if !tokens.is_empty() {
                items.push((i + 1, tokens));
            }
        }
        Records {
            items,
            pos: 0,
            end_line,
        }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &[&'a str]), SfmError> {
        match self.items.get(self.pos) {
            Some((line, tokens)) => {
                self.pos += 1;
                Ok((*line, tokens))
            }
            None => Err(syntax(self.end_line, format!("expected {what}, found end of file"))),
        }
    }

    fn peek_first_token(&self) -> Option<&'a str> {
        self.items.get(self.pos).map(|(_, tokens)| tokens[0])
    }

    fn leftover(&self) -> Option<usize> {
        self.items.get(self.pos).map(|(line, _)| *line)
    }
}

fn parse_count(token: &str, line: usize, what: &str) -> Result<usize, SfmError> {
    token
        .parse::<usize>()
        .map_err(|_| syntax(line, format!("{what} must be a non-negative integer, got {token:?}")))
}

fn read_matrix(records: &mut Records, rows: usize, cols: usize) -> Result<IntMatrix, SfmError> {
    let mut entries = Vec::with_capacity(rows * cols);
    for _ in 0..rows {
        let (line, tokens) = records.next(&format!("a matrix row of {cols} integers"))?;
        if tokens.len() != cols {
            return Err(syntax(
                line,
                format!("expected {cols} entries in matrix row, got {}", tokens.len()),
            ));
        }
        for token in tokens {
            let value = token
                .parse::<BigInt>()
                .map_err(|_| syntax(line, format!("matrix entry {token:?} is not an integer")))?;
            entries.push(value);
        }
    }
    Ok(IntMatrix::new(rows, cols, entries))
}

fn expect_keyword(
    records: &mut Records,
    keyword: &str,
    arity: usize,
) -> Result<(usize, Vec<String>), SfmError> {
    let (line, tokens) = records.next(&format!("`{keyword}` line"))?;
    if tokens[0] != keyword || tokens.len() != arity + 1 {
        return Err(syntax(
            line,
            format!("expected `{keyword}` with {arity} value(s), got {:?}", tokens.join(" ")),
        ));
    }
    Ok((line, tokens[1..].iter().map(|t| t.to_string()).collect()))
}

fn read_component(
    records: &mut Records,
    which: usize,
) -> Result<SeifertForm, SfmError> {
    let (line, tokens) = records.next(&format!("`component {which} rank r` line"))?;
    if tokens.len() != 4 || tokens[0] != "component" || tokens[2] != "rank" {
        return Err(syntax(line, format!("expected `component {which} rank r`")));
    }
    if tokens[1] != which.to_string() {
        return Err(syntax(
            line,
            format!("components must appear in order; expected component {which}"),
        ));
    }
    let rank = parse_count(tokens[3], line, "component rank")?;
    let a = read_matrix(records, rank, rank)?;
    Ok(SeifertForm::knot(a, Epsilon::Plus))
}

/// Parses one payload and validates it; `SyntaxError` for malformed text,
/// `ValidationError` when the shape or the structural invariants fail.
pub fn parse_sfm(text: &str) -> Result<Payload, SfmError> {
    let mut records = Records::new(text);

    let (line, header) = records.next("header `sfm 1`")?;
    if header != ["sfm", "1"] {
        return Err(syntax(line, "expected header `sfm 1`"));
    }

    let (kind_line, kind_values) = expect_keyword(&mut records, "kind", 1)?;
    let kind = kind_values[0].as_str();
    if !["knot", "link1", "link2"].contains(&kind) {
        return Err(syntax(
            kind_line,
            format!("kind must be knot, link1, or link2, got {kind:?}"),
        ));
    }

    let (eps_line, eps_values) = expect_keyword(&mut records, "epsilon", 1)?;
    let epsilon: Epsilon = eps_values[0]
        .parse()
        .map_err(|e: String| syntax(eps_line, e))?;

    let payload = if kind == "link2" {
        let (rank_line, tokens) = records.next("`rank N1 N2` line")?;
        if tokens.len() != 3 || tokens[0] != "rank" {
            return Err(syntax(rank_line, "link2 needs `rank N1 N2`"));
        }
        let r1 = parse_count(tokens[1], rank_line, "rank")?;
        let r2 = parse_count(tokens[2], rank_line, "rank")?;
        let a1 = read_matrix(&mut records, r1, r1)?;
        let coupling = read_matrix(&mut records, r1, r2)?;
        let a2 = read_matrix(&mut records, r2, r2)?;
        let p = LinkPresentation2::new(
            SeifertForm::knot(a1, epsilon),
            SeifertForm::knot(a2, epsilon),
            coupling,
        )
        .map_err(|e| validation(e.to_string()))?;
        Payload::Link2(p)
    } else {
        let (rank_line, tokens) = records.next("`rank N` line")?;
        if tokens.len() != 2 || tokens[0] != "rank" {
            return Err(syntax(rank_line, format!("{kind} needs `rank N`")));
        }
        let rank = parse_count(tokens[1], rank_line, "rank")?;
        let a = read_matrix(&mut records, rank, rank)?;
        let form_kind = if kind == "knot" {
            FormKind::Knot
        } else {
            FormKind::Link1
        };
        let full = SeifertForm::new(a, epsilon, form_kind);
        if kind == "link1" && records.peek_first_token() == Some("component") {
            let comp1 = read_component(&mut records, 1)?;
            let comp2 = read_component(&mut records, 2)?;
            let p = LinkPresentation1::new(full, comp1, comp2)
                .map_err(|e| validation(e.to_string()))?;
            Payload::Link1(p)
        } else {
            Payload::Form(full)
        }
    };

    if let Some(line) = records.leftover() {
        return Err(syntax(line, "unexpected content after complete payload"));
    }

    let violations = payload_violations(&payload);
    if !violations.is_empty() {
        return Err(validation(violations.join("; ")));
    }
    Ok(payload)
}

fn write_matrix(out: &mut String, m: &IntMatrix) {
    for i in 0..m.rows() {
        let cells: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
        writeln!(out, "{}", cells.join(" ")).expect("string writes are infallible");
    }
}

/// Canonical text for a payload: fixed header order, one matrix row per
/// line, no comments. link1 presentations always carry both component
/// sections; bare link1 forms carry none.
pub fn write_sfm(payload: &Payload) -> String {
    let mut out = String::new();
    let push_header = |out: &mut String, kind: &str, epsilon: Epsilon| {
        writeln!(out, "sfm 1").unwrap();
        writeln!(out, "kind {kind}").unwrap();
        writeln!(out, "epsilon {epsilon}").unwrap();
    };
    match payload {
        Payload::Form(f) => {
            let kind = match f.kind() {
                FormKind::Knot => "knot",
                FormKind::Link1 => "link1",
            };
            push_header(&mut out, kind, f.epsilon());
            writeln!(out, "rank {}", f.rank()).unwrap();
            write_matrix(&mut out, f.matrix());
        }
        Payload::Link2(p) => {
            push_header(&mut out, "link2", p.epsilon());
            writeln!(out, "rank {} {}", p.comp1().rank(), p.comp2().rank()).unwrap();
            write_matrix(&mut out, p.comp1().matrix());
            write_matrix(&mut out, p.coupling());
            write_matrix(&mut out, p.comp2().matrix());
        }
        Payload::Link1(p) => {
            push_header(&mut out, "link1", p.full().epsilon());
            writeln!(out, "rank {}", p.full().rank()).unwrap();
            write_matrix(&mut out, p.full().matrix());
            for (which, comp) in [(1, p.comp1()), (2, p.comp2())] {
                writeln!(out, "component {which} rank {}", comp.rank()).unwrap();
                write_matrix(&mut out, comp.matrix());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, catalog_get};

    #[test]
    fn round_trip_is_identity_on_all_catalog_entries() {
        for entry in catalog() {
            let text = write_sfm(&entry.payload);
            let parsed = parse_sfm(&text).unwrap_or_else(|e| panic!("{}: {e}", entry.name));
            assert_eq!(parsed, entry.payload, "{}", entry.name);
            assert_eq!(write_sfm(&parsed), text, "{}", entry.name);
        }
    }

    #[test]
    fn parses_commented_link2_file_to_the_catalog_entry() {
        let text = "\
# sample band sum, epsilon +1
sfm 1
kind link2
epsilon +1

rank 2 2
1 1   # first summand
0 0
0 0   # coupling block
1 0
0 1   # second summand
0 1
";
        let parsed = parse_sfm(text).unwrap();
        assert_eq!(parsed, catalog_get("prop91_K").unwrap().payload);
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let missing_header = parse_sfm("kind knot\n");
        assert_eq!(
            missing_header,
            Err(SfmError::SyntaxError {
                line: 1,
                msg: "expected header `sfm 1`".to_string()
            })
        );

        let short_row = parse_sfm("sfm 1\nkind knot\nepsilon +1\nrank 2\n1 1\n0\n");
        assert!(matches!(
            short_row,
            Err(SfmError::SyntaxError { line: 6, .. })
        ));

        let truncated = parse_sfm("sfm 1\nkind knot\nepsilon +1\nrank 2\n1 1\n");
        assert!(matches!(
            truncated,
            Err(SfmError::SyntaxError { line: 6, .. })
        ));

        let trailing = parse_sfm("sfm 1\nkind knot\nepsilon +1\nrank 1\n0\n7 7\n");
        assert!(matches!(
            trailing,
            Err(SfmError::SyntaxError { line: 6, .. })
        ));

        let bad_epsilon = parse_sfm("sfm 1\nkind knot\nepsilon 2\nrank 0\n");
        assert!(matches!(
            bad_epsilon,
            Err(SfmError::SyntaxError { line: 3, .. })
        ));
    }

    #[test]
    fn structural_violations_are_validation_errors() {
        // determinant of the intersection form is 4, not a unit
        let bad_knot = parse_sfm("sfm 1\nkind knot\nepsilon -1\nrank 1\n2\n");
        match bad_knot {
            Err(SfmError::ValidationError { detail }) => {
                assert!(detail.contains("determinant"), "{detail}");
            }
            other => panic!("expected validation error, got {other:?}"),
        }

        let bad_link1 = parse_sfm("sfm 1\nkind link1\nepsilon -1\nrank 1\n1\n");
        assert!(matches!(bad_link1, Err(SfmError::ValidationError { .. })));

        let even_link1 = parse_sfm("sfm 1\nkind link1\nepsilon +1\nrank 2\n0 1\n0 0\n");
        assert!(matches!(even_link1, Err(SfmError::ValidationError { .. })));
    }

    #[test]
    fn component_sections_must_be_complete_and_ordered() {
        let only_one = parse_sfm(
            "sfm 1\nkind link1\nepsilon +1\nrank 1\n1\ncomponent 1 rank 0\n",
        );
        assert!(matches!(only_one, Err(SfmError::SyntaxError { line: 7, .. })));

        let out_of_order = parse_sfm(
            "sfm 1\nkind link1\nepsilon +1\nrank 1\n1\ncomponent 2 rank 0\n",
        );
        assert!(matches!(
            out_of_order,
            Err(SfmError::SyntaxError { line: 6, .. })
        ));
    }
}
