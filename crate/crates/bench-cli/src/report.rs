//! Output rendering: aligned key/value tables for humans, one
//! TAB-separated `key<TAB>value` line per quantity for machines.

use std::fmt::Display;
use std::str::FromStr;

use crate::checks::CheckReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Records,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(Format::Table),
            "records" => Ok(Format::Records),
            other => Err(format!("format must be table or records, got {other:?}")),
        }
    }
}

/// Ordered key/value rows rendered in either format. Values must be single
/// lines so the records mode stays one quantity per line.
#[derive(Debug, Clone, Default)]
pub struct Report {
    rows: Vec<(String, String)>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Display) {
        let key = key.into();
        let value = value.to_string();
        debug_assert!(!value.contains('\n'), "report values are single lines");
        self.rows.push((key, value));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Records => self
                .rows
                .iter()
                .map(|(k, v)| format!("{k}\t{v}\n"))
                .collect(),
            Format::Table => {
                let width = self.rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                self.rows
                    .iter()
                    .map(|(k, v)| format!("{k:<width$}  {v}\n"))
                    .collect()
            }
        }
    }
}

/// One check suite as rows: headline numbers first, then every failure with
/// its reproduction seed.
pub fn check_rows(report: &CheckReport) -> Report {
    let mut rows = Report::new();
    rows.push("check", &report.name);
    rows.push("trials", report.trials);
    rows.push("failures", report.failures.len());
    rows.push(
        "status",
        if report.passed() { "pass" } else { "FAIL" },
    );
    rows.push("elapsed_ms", report.elapsed.as_millis());
    for (i, f) in report.failures.iter().enumerate() {
        let n = i + 1;
        rows.push(format!("failure{n}.seed"), f.seed);
        rows.push(format!("failure{n}.inputs"), &f.inputs);
        rows.push(format!("failure{n}.expected"), &f.expected);
        rows.push(format!("failure{n}.got"), &f.got);
    }
    rows
}
