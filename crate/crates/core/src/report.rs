//! Report records shared by the pipelines and the command line.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

pub const CYCLE_FLAG: &str = "degrees are cycle-theoretic: each image locus is counted with the \
     degree of the projection restricted to the singularity locus";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocusResult {
    pub locus: String,
    pub k: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub role: Option<String>,
    #[serde(with = "crate::decimal")]
    pub engine_degree: BigInt,
    #[serde(with = "crate::decimal::option")]
    pub closed_form: Option<BigInt>,
    /// True when there is no closed form to compare against.
    #[serde(rename = "match")]
    pub matches: bool,
}

impl LocusResult {
    pub fn new(locus: &str, k: u32, engine_degree: BigInt, closed_form: Option<BigInt>) -> Self {
        let matches = closed_form.as_ref().is_none_or(|c| c == &engine_degree);
        LocusResult { locus: locus.into(), k, role: None, engine_degree, closed_form, matches }
    }

    pub fn with_role(mut self, role: &str) -> Self {
        self.role = Some(role.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    #[serde(with = "crate::decimal")]
    pub lhs: BigInt,
    #[serde(with = "crate::decimal")]
    pub rhs: BigInt,
    pub holds: bool,
}

impl IdentityCheck {
    pub fn new(name: &str, lhs: BigInt, rhs: BigInt) -> Self {
        let holds = lhs == rhs;
        IdentityCheck { name: name.into(), lhs, rhs, holds }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerativeReport {
    pub input: BTreeMap<String, String>,
    pub results: Vec<LocusResult>,
    pub identities: Vec<IdentityCheck>,
    /// Reference numbers with no engine counterpart.
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub values: BTreeMap<String, String>,
    pub citations: Vec<String>,
    pub flags: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub evolute_polynomial: Option<String>,
}

impl EnumerativeReport {
    pub fn new(kind: &str) -> Self {
        let mut r = EnumerativeReport::default();
        r.echo("kind", kind);
        r.flag(CYCLE_FLAG);
        r
    }

    pub fn echo(&mut self, key: &str, value: impl ToString) {
        self.input.insert(key.into(), value.to_string());
    }

    pub fn flag(&mut self, text: &str) {
        if !self.flags.iter().any(|f| f == text) {
            self.flags.push(text.into());
        }
    }

    pub fn cite(&mut self, text: &str) {
        if !self.citations.iter().any(|c| c == text) {
            self.citations.push(text.into());
        }
    }

    pub fn result(&self, locus: &str) -> Option<&LocusResult> {
        self.results.iter().find(|r| r.locus == locus)
    }

    pub fn identity(&self, name: &str) -> Option<&IdentityCheck> {
        self.identities.iter().find(|i| i.name == name)
    }

    /// Every comparison agrees.
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.matches) && self.identities.iter().all(|i| i.holds)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let input: Vec<String> = self.input.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(out, "input: {}", input.join(" ")).unwrap();
        if !self.results.is_empty() {
            let rows: Vec<[String; 5]> = self
                .results
                .iter()
                .map(|r| {
                    let name = match &r.role {
                        Some(role) => format!("{} ({role})", r.locus),
                        None => r.locus.clone(),
                    };
                    [
                        name,
                        r.k.to_string(),
                        r.engine_degree.to_string(),
                        r.closed_form.as_ref().map_or("-".into(), |c| c.to_string()),
                        if r.matches { "ok" } else { "MISMATCH" }.into(),
                    ]
                })
                .collect();
            table(&mut out, ["locus", "k", "engine", "closed form", "match"], &rows);
        }
        for i in &self.identities {
            let verdict = if i.holds { "holds" } else { "FAILS" };
            writeln!(out, "identity {}: {} vs {} {verdict}", i.name, i.lhs, i.rhs).unwrap();
        }
        for (k, v) in &self.values {
            writeln!(out, "value {k} = {v}").unwrap();
        }
        if let Some(p) = &self.evolute_polynomial {
            writeln!(out, "evolute: {p}").unwrap();
        }
        for f in &self.flags {
            writeln!(out, "note: {f}").unwrap();
        }
        for c in &self.citations {
            writeln!(out, "source: {c}").unwrap();
        }
        writeln!(out, "status: {}", if self.passed() { "PASS" } else { "FAIL" }).unwrap();
        out
    }

    /// Flat columns: the input echo, then engine and closed-form value per
    /// locus, identity verdicts and an overall verdict.
    pub fn csv_record(&self) -> Vec<(String, String)> {
        let mut cols: Vec<(String, String)> =
            self.input.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        for r in &self.results {
            cols.push((format!("{}_engine", r.locus), r.engine_degree.to_string()));
            cols.push((
                format!("{}_closed", r.locus),
                r.closed_form.as_ref().map_or(String::new(), |c| c.to_string()),
            ));
        }
        for i in &self.identities {
            cols.push((i.name.clone(), i.holds.to_string()));
        }
        for (k, v) in &self.values {
            cols.push((k.clone(), v.clone()));
        }
        cols.push(("pass".into(), self.passed().to_string()));
        cols
    }
}

fn table<const N: usize>(out: &mut String, header: [&str; N], rows: &[[String; N]]) {
    let mut widths = header.map(str::len);
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |out: &mut String, cells: Vec<&str>| {
        let padded: Vec<String> =
            cells.iter().zip(widths).map(|(c, w)| format!("{c:<w$}")).collect();
        writeln!(out, "{}", padded.join("  ").trim_end()).unwrap();
    };
    line(out, header.to_vec());
    for row in rows {
        line(out, row.iter().map(String::as_str).collect());
    }
}

/// Writes reports as CSV, one row each. The header comes from the union of
/// columns in first-seen order.
pub fn to_csv(reports: &[EnumerativeReport]) -> Result<String, csv::Error> {
    let records: Vec<Vec<(String, String)>> = reports.iter().map(|r| r.csv_record()).collect();
    let mut header: Vec<String> = Vec::new();
    for rec in &records {
        for (k, _) in rec {
            if !header.contains(k) {
                header.push(k.clone());
            }
        }
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&header)?;
    for rec in &records {
        let map: BTreeMap<&str, &str> = rec.iter().map(|(k, v)| (k.as_str(), v.as_str())).collect();
        w.write_record(header.iter().map(|h| map.get(h.as_str()).copied().unwrap_or("")))?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
