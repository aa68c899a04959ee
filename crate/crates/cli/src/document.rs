use std::fmt::Write as _;

use serde::Serialize;
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn new(path: &str, bytes: &[u8]) -> Self {
        InputDigest { path: path.to_string(), sha256: hex::encode(Sha256::digest(bytes)) }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Entry {
    Single { index: i64, dim: usize },
    Pair { p: i64, q: i64, dim: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct Table {
    pub name: String,
    /// What the index counts: `degree`, `bidegree`, `weight`, ...
    pub index: String,
    pub entries: Vec<Entry>,
}

impl Table {
    pub fn degrees(name: &str, dims: &[usize]) -> Self {
        Table {
            name: name.into(),
            index: "degree".into(),
            entries: dims.iter().enumerate().map(|(n, &dim)| Entry::Single { index: n as i64, dim }).collect(),
        }
    }

    pub fn singles(name: &str, index: &str, cells: impl IntoIterator<Item = (i64, usize)>) -> Self {
        Table { name: name.into(), index: index.into(), entries: cells.into_iter().map(|(index, dim)| Entry::Single { index, dim }).collect() }
    }

    pub fn pairs(name: &str, cells: impl IntoIterator<Item = (i64, i64, usize)>) -> Self {
        let mut entries: Vec<(i64, i64, usize)> = cells.into_iter().collect();
        entries.sort();
        Table { name: name.into(), index: "bidegree".into(), entries: entries.into_iter().map(|(p, q, dim)| Entry::Pair { p, q, dim }).collect() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub label: String,
    pub expression: String,
}

/// The outcome of one command. Every collection is in a fixed order, so
/// identical inputs give byte-identical documents.
#[derive(Clone, Debug, Serialize)]
pub struct ResultDocument {
    pub schema_version: u32,
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub tables: Vec<Table>,
    pub verdicts: Vec<Verdict>,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
    /// The module report behind the tables.
    pub details: serde_json::Value,
}

impl ResultDocument {
    pub fn new(command: Vec<String>) -> Self {
        ResultDocument {
            schema_version: SCHEMA_VERSION,
            command,
            inputs: Vec::new(),
            tables: Vec::new(),
            verdicts: Vec::new(),
            witnesses: Vec::new(),
            notes: Vec::new(),
            details: serde_json::Value::Null,
        }
    }

    pub fn table(&mut self, t: Table) {
        self.tables.push(t);
    }

    pub fn verdict(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.verdicts.push(Verdict { name: name.into(), pass, detail: detail.into() });
    }

    pub fn witness(&mut self, label: impl Into<String>, expression: impl Into<String>) {
        self.witnesses.push(Witness { label: label.into(), expression: expression.into() });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn details(&mut self, value: &impl Serialize) {
        self.details = serde_json::to_value(value).expect("reports serialize");
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    /// Plain-text tables for a terminal.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for t in &self.tables {
            let _ = writeln!(out, "{} (by {})", t.name, t.index);
            if t.entries.is_empty() {
                let _ = writeln!(out, "  (empty)");
            }
            for e in &t.entries {
                let _ = match e {
                    Entry::Single { index, dim } => writeln!(out, "  {index:>4}  {dim}"),
                    Entry::Pair { p, q, dim } => writeln!(out, "  {:>8}  {dim}", format!("({p},{q})")),
                };
            }
        }
        for w in &self.witnesses {
            let _ = writeln!(out, "{} = {}", w.label, w.expression);
        }
        for v in &self.verdicts {
            let _ = writeln!(out, "{} {}: {}", if v.pass { "PASS" } else { "FAIL" }, v.name, v.detail);
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        out
    }
}
