use std::fmt;

use serde::{Serialize, Serializer};

use crate::automata::format::AutomatonFile;
use crate::automata::Automaton;
use crate::error::Result;
use crate::formulas::{Nat, Ratio};

/// A computed or expected quantity. Numbers are always exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Nat(Nat),
    Ratio(Ratio),
    Flag(bool),
}

impl Value {
    /// Numeric view; `None` for flags.
    pub fn as_ratio(&self) -> Option<Ratio> {
        match self {
            Value::Nat(n) => Some(Ratio::integer(n.clone())),
            Value::Ratio(r) => Some(r.clone()),
            Value::Flag(_) => None,
        }
    }
}

impl From<Nat> for Value {
    fn from(v: Nat) -> Self {
        Value::Nat(v)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Nat(Nat::from(v))
    }
}

impl From<u64> for Value {
    fn from(v: u64) -> Self {
        Value::Nat(Nat::from(v))
    }
}

impl From<Ratio> for Value {
    fn from(v: Ratio) -> Self {
        Value::Ratio(v)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Flag(v)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Nat(n) => n.fmt(f),
            Value::Ratio(r) => r.fmt(f),
            Value::Flag(b) => b.fmt(f),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Value::Flag(b) => s.serialize_bool(*b),
            other => s.collect_str(other),
        }
    }
}

/// What a computed value is checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expected {
    Equal(Value),
    AtMost(Value),
    LessThan(Value),
    GreaterThan(Value),
    /// Nothing to check: the row records an observation.
    Observation,
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expected::Equal(v) => write!(f, "= {v}"),
            Expected::AtMost(v) => write!(f, "<= {v}"),
            Expected::LessThan(v) => write!(f, "< {v}"),
            Expected::GreaterThan(v) => write!(f, "> {v}"),
            Expected::Observation => f.write_str("-"),
        }
    }
}

impl Serialize for Expected {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Match,
    Mismatch,
    WithinBound,
    ExceedsBound,
    Finding,
}

impl Verdict {
    pub fn passes(self) -> bool {
        matches!(self, Verdict::Match | Verdict::WithinBound | Verdict::Finding)
    }

    fn derive(computed: &Value, expected: &Expected) -> Verdict {
        let cmp = |v: &Value| -> Option<std::cmp::Ordering> {
            Some(computed.as_ratio()?.cmp(&v.as_ratio()?))
        };
        use std::cmp::Ordering::*;
        match expected {
            Expected::Observation => Verdict::Finding,
            Expected::Equal(v) => {
                if computed == v || cmp(v) == Some(Equal) {
                    Verdict::Match
                } else {
                    Verdict::Mismatch
                }
            }
            Expected::AtMost(v) => match cmp(v) {
                Some(Less | Equal) => Verdict::WithinBound,
                _ => Verdict::ExceedsBound,
            },
            Expected::LessThan(v) => match cmp(v) {
                Some(Less) => Verdict::WithinBound,
                _ => Verdict::ExceedsBound,
            },
            Expected::GreaterThan(v) => match cmp(v) {
                Some(Greater) => Verdict::Match,
                _ => Verdict::Mismatch,
            },
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::WithinBound => "within-bound",
            Verdict::ExceedsBound => "exceeds-bound",
            Verdict::Finding => "finding",
        })
    }
}

/// One checked quantity. The verdict is derived from the other fields at
/// construction and cannot be set by hand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub params: String,
    pub computed: Value,
    pub expected: Expected,
    /// Where the expected value comes from (a formula, a construction
    /// bound, an independent count).
    pub provenance: String,
    verdict: Verdict,
}

impl Row {
    pub fn new(
        params: impl Into<String>,
        computed: impl Into<Value>,
        expected: Expected,
        provenance: impl Into<String>,
    ) -> Self {
        let computed = computed.into();
        let verdict = Verdict::derive(&computed, &expected);
        Row {
            params: params.into(),
            computed,
            expected,
            provenance: provenance.into(),
            verdict,
        }
    }

    pub fn verdict(&self) -> Verdict {
        self.verdict
    }
}

/// A plain data table reproduced by an experiment, rendered as is.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// An automaton attached to a report, e.g. the argument tuple that
/// maximized a search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedded {
    pub label: String,
    pub automaton: AutomatonFile,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub experiment: String,
    pub passed: bool,
    /// Set when a search stopped at its budget before covering its space.
    pub partial: bool,
    pub rows: Vec<Row>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub tables: Vec<Table>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Embedded>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl Report {
    pub fn new(experiment: impl Into<String>) -> Self {
        Report {
            experiment: experiment.into(),
            passed: true,
            partial: false,
            rows: Vec::new(),
            tables: Vec::new(),
            witnesses: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Row) {
        self.passed &= row.verdict().passes();
        self.rows.push(row);
    }

    pub fn check(
        &mut self,
        params: impl Into<String>,
        computed: impl Into<Value>,
        expected: Expected,
        provenance: impl Into<String>,
    ) {
        self.push(Row::new(params, computed, expected, provenance));
    }

    pub fn embed(&mut self, label: impl Into<String>, a: &Automaton) {
        self.witnesses.push(Embedded {
            label: label.into(),
            automaton: AutomatonFile::from_automaton(a),
        });
    }

    /// Appends another report's rows, tables, witnesses and notes.
    pub fn absorb(&mut self, other: Report) {
        self.passed &= other.passed;
        self.partial |= other.partial;
        self.rows.extend(other.rows);
        self.tables.extend(other.tables);
        self.witnesses.extend(other.witnesses);
        self.notes.extend(other.notes);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| !r.verdict().passes())
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Text => Ok(self.to_text()),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    /// The check rows as CSV, followed by each table as its own CSV block
    /// separated by a blank line.
    pub fn to_csv(&self) -> Result<String> {
        let mut blocks = Vec::new();
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["params", "computed", "expected", "provenance", "verdict"])
            .map_err(csv_err)?;
        for r in &self.rows {
            w.write_record([
                r.params.clone(),
                r.computed.to_string(),
                r.expected.to_string(),
                r.provenance.clone(),
                r.verdict().to_string(),
            ])
            .map_err(csv_err)?;
        }
        blocks.push(w.into_inner().map_err(|e| crate::Error::Io(e.into_error()))?);
        for t in &self.tables {
            let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
            w.write_record([format!("# {}", t.title)]).map_err(csv_err)?;
            w.write_record(&t.columns).map_err(csv_err)?;
            for row in &t.rows {
                w.write_record(row).map_err(csv_err)?;
            }
            blocks.push(w.into_inner().map_err(|e| crate::Error::Io(e.into_error()))?);
        }
        let text: Vec<String> = blocks
            .into_iter()
            .map(|b| String::from_utf8(b).expect("csv output is utf-8"))
            .collect();
        Ok(text.join("\n"))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "experiment: {}\nresult: {}{}\n\n",
            self.experiment,
            if self.passed { "pass" } else { "FAIL" },
            if self.partial { " (partial)" } else { "" }
        );
        let header = ["params", "computed", "expected", "provenance", "verdict"].map(String::from);
        let body: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| {
                vec![
                    r.params.clone(),
                    r.computed.to_string(),
                    r.expected.to_string(),
                    r.provenance.clone(),
                    r.verdict().to_string(),
                ]
            })
            .collect();
        out.push_str(&aligned(&header, &body));
        for t in &self.tables {
            out.push_str(&format!("\n{}\n", t.title));
            out.push_str(&aligned(&t.columns, &t.rows));
        }
        for w in &self.witnesses {
            let json = serde_json::to_string(&w.automaton).expect("automaton files serialize");
            out.push_str(&format!("\n{}: {json}\n", w.label));
        }
        for n in &self.notes {
            out.push_str(&format!("\nnote: {n}\n"));
        }
        out
    }
}

fn csv_err(e: csv::Error) -> crate::Error {
    crate::Error::Io(std::io::Error::other(e))
}

fn aligned(header: &[String], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let mut s = String::new();
        for (i, cell) in cells.iter().enumerate().take(cols) {
            if i + 1 == cols {
                s.push_str(cell);
            } else {
                s.push_str(&format!("{cell:<w$}  ", w = widths[i]));
            }
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(header);
    for r in rows {
        out.push_str(&line(r));
    }
    out
}
