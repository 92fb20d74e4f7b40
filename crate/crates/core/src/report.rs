//! Audit report data model and serialisation. Reports are deterministic:
//! entries are sorted by relation id, then bindings, then reading, so two
//! runs with the same configuration produce byte-identical output.

use serde::Serialize;
use std::collections::BTreeMap;

pub const REPORT_VERSION: &str = "1";

#[derive(Clone, Debug, Serialize, PartialEq, Eq, PartialOrd, Ord)]
pub struct ResultEntry {
    pub id: String,
    pub bindings: BTreeMap<String, i64>,
    /// "corrected" when a misprint-adjusted reading was evaluated,
    /// "printed" for the literal text
    pub reading: String,
    pub residual_zero: bool,
    pub residual_repr: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ledger_entry: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub version: String,
    pub config: serde_json::Value,
    pub results: Vec<ResultEntry>,
}

impl AuditReport {
    pub fn new(config: serde_json::Value) -> Self {
        AuditReport {
            version: REPORT_VERSION.to_string(),
            config,
            results: Vec::new(),
        }
    }

    pub fn push(&mut self, entry: ResultEntry) {
        self.results.push(entry);
    }

    pub fn extend(&mut self, entries: Vec<ResultEntry>) {
        self.results.extend(entries);
    }

    pub fn sort(&mut self) {
        self.results.sort();
    }

    /// All residuals zero, excluding ledgered misprint entries.
    pub fn all_ok(&self) -> bool {
        self.results
            .iter()
            .all(|e| e.residual_zero || e.ledger_entry.is_some())
    }

    /// Entries whose nonzero residual is not covered by a ledger note.
    pub fn unexpected(&self) -> Vec<&ResultEntry> {
        self.results
            .iter()
            .filter(|e| !e.residual_zero && e.ledger_entry.is_none())
            .collect()
    }

    /// Ledgered nonzero residuals (documented misprints), by relation id.
    pub fn ledgered_ids(&self) -> Vec<String> {
        let mut ids: Vec<String> = self
            .results
            .iter()
            .filter(|e| !e.residual_zero && e.ledger_entry.is_some())
            .map(|e| e.id.clone())
            .collect();
        ids.sort();
        ids.dedup();
        ids
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# Audit report (v{})\n\n", self.version));
        out.push_str(&format!("config: `{}`\n\n", self.config));
        out.push_str("| id | bindings | reading | zero | residual |\n");
        out.push_str("|----|----------|---------|------|----------|\n");
        for e in &self.results {
            let binds: Vec<String> = e.bindings.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} |\n",
                e.id,
                binds.join(","),
                e.reading,
                if e.residual_zero { "yes" } else { "NO" },
                if e.residual_zero {
                    String::new()
                } else {
                    e.residual_repr.clone()
                }
            ));
        }
        out
    }

    /// One line per relation id: pass/fail summary for terminal display.
    pub fn summary_lines(&self) -> Vec<String> {
        let mut per_id: BTreeMap<&str, (usize, usize, usize)> = BTreeMap::new();
        for e in &self.results {
            let slot = per_id.entry(&e.id).or_insert((0, 0, 0));
            slot.0 += 1;
            if !e.residual_zero {
                if e.ledger_entry.is_some() {
                    slot.2 += 1;
                } else {
                    slot.1 += 1;
                }
            }
        }
        per_id
            .into_iter()
            .map(|(id, (total, bad, ledgered))| {
                if bad > 0 {
                    format!("FAIL {id}: {bad}/{total} unexpected nonzero residuals")
                } else if ledgered > 0 {
                    format!("pass {id}: {total} instances ({ledgered} ledgered misprints)")
                } else {
                    format!("pass {id}: {total} instances")
                }
            })
            .collect()
    }
}

pub fn bindings_map(binds: &[(char, i64)]) -> BTreeMap<String, i64> {
    binds.iter().map(|(c, v)| (c.to_string(), *v)).collect()
}
