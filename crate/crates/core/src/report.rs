//! Rendering of model sets as boxed truth tables, JSON and CSV.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::herbrand::{ClosedLiteralSet, HerbrandBase2};
use crate::models::ModelSet;

/// Output style for [`render_table`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Style {
    #[default]
    Paper,
    Json,
    Csv,
}

/// One row: the truth values of `A, ¬A, ¬²A, ¬³A` for every atom in base order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportRow {
    pub set: ClosedLiteralSet,
    pub values: Vec<[bool; 4]>,
    pub minimal: bool,
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelReport {
    pub base: HerbrandBase2,
    pub rows: Vec<ReportRow>,
    /// Source text of the program or formula set, echoed in JSON.
    pub source: String,
    pub notes: Vec<String>,
}

fn values(m: &ClosedLiteralSet, atom: usize) -> [bool; 4] {
    let (p, d) = (m.plain().contains(&atom), m.dneg().contains(&atom));
    [p, !p, d, !d]
}

impl ModelReport {
    pub fn new(models: &ModelSet, source: impl Into<String>) -> Self {
        let rows = models
            .members
            .iter()
            .map(|e| ReportRow {
                values: (0..models.base.len()).map(|a| values(&e.set, a)).collect(),
                set: e.set.clone(),
                minimal: e.minimal,
                complete: e.complete,
            })
            .collect();
        ModelReport { base: models.base.clone(), rows, source: source.into(), notes: Vec::new() }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    fn headers(&self, ascii: bool) -> Vec<String> {
        let neg = |n: usize| match (ascii, n) {
            (_, 0) => String::new(),
            (true, n) => "~".repeat(n),
            (false, 1) => "¬".into(),
            (false, 2) => "¬²".into(),
            (false, _) => "¬³".into(),
        };
        let mut h: Vec<String> = self
            .base
            .atoms()
            .iter()
            .flat_map(|a| (0..4).map(move |n| (n, a)))
            .map(|(n, a)| format!("{}{a}", neg(n)))
            .collect();
        h.push("minimal".into());
        h.push("complete".into());
        h
    }

    fn cells(row: &ReportRow) -> Vec<&'static str> {
        let word = |b: bool| if b { "true" } else { "false" };
        row.values
            .iter()
            .flat_map(|v| v.iter().map(|&b| word(b)))
            .chain([word(row.minimal), word(row.complete)])
            .collect()
    }

    /// `{"program", "base", "models", "stable"}`; `stable` lists the complete
    /// minimal members.
    pub fn to_json(&self) -> ModelSetJson {
        let names = |s: &BTreeSet<usize>| s.iter().map(|&a| self.base.atom(a).to_string()).collect::<Vec<_>>();
        ModelSetJson {
            program: self.source.clone(),
            base: self.base.atoms().iter().map(ToString::to_string).collect(),
            models: self
                .rows
                .iter()
                .map(|r| ModelJson {
                    plain: names(r.set.plain()),
                    dneg: names(r.set.dneg()),
                    minimal: r.minimal,
                    complete: r.complete,
                })
                .collect(),
            stable: self.rows.iter().filter(|r| r.minimal && r.complete).map(|r| names(r.set.plain())).collect(),
            notes: self.notes.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModelJson {
    pub plain: Vec<String>,
    pub dneg: Vec<String>,
    pub minimal: bool,
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModelSetJson {
    pub program: String,
    pub base: Vec<String>,
    pub models: Vec<ModelJson>,
    pub stable: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Sentinel printed in place of an empty table.
pub const NO_MODELS: &str = "no models";

pub fn render_table(report: &ModelReport, style: Style, ascii: bool) -> String {
    match style {
        Style::Paper => render_paper(report, ascii),
        Style::Json => {
            let mut s = serde_json::to_string_pretty(&report.to_json()).expect("plain data serializes");
            s.push('\n');
            s
        }
        Style::Csv => {
            let mut out = report.headers(ascii).join(",");
            out.push('\n');
            for row in &report.rows {
                out.push_str(&ModelReport::cells(row).join(","));
                out.push('\n');
            }
            out
        }
    }
}

fn render_paper(report: &ModelReport, ascii: bool) -> String {
    let headers = report.headers(ascii);
    let width = |s: &str| s.chars().count();
    let widths: Vec<usize> = headers.iter().map(|h| width(h).max(5)).collect();
    let line = |cells: &[&str]| -> String {
        let padded: Vec<String> =
            cells.iter().zip(&widths).map(|(c, &w)| format!("{c}{}", " ".repeat(w - width(c)))).collect();
        format!("| {} |", padded.join(" | "))
    };
    let rule = format!("+{}+", widths.iter().map(|w| "-".repeat(w + 2)).collect::<Vec<_>>().join("+"));
    let mut out = String::new();
    out.push_str(&rule);
    out.push('\n');
    out.push_str(&line(&headers.iter().map(String::as_str).collect::<Vec<_>>()));
    out.push('\n');
    out.push_str(&rule.replace('-', "="));
    out.push('\n');
    if report.rows.is_empty() {
        let inner = rule.chars().count() - 4;
        out.push_str(&format!("| {NO_MODELS}{} |\n", " ".repeat(inner - NO_MODELS.len())));
    }
    for row in &report.rows {
        out.push_str(&line(&ModelReport::cells(row)));
        out.push('\n');
    }
    out.push_str(&rule);
    out.push('\n');
    for note in &report.notes {
        out.push_str(&format!("note: {note}\n"));
    }
    out
}
