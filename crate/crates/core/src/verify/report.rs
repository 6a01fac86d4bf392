use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use super::{ReportEntry, Verdict};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    #[serde(rename = "match")]
    pub matched: usize,
    pub bound_holds: usize,
    pub bound_tight: usize,
    pub discrepancy: usize,
    pub not_applicable: usize,
    pub skipped: usize,
    /// Discrepancies against bounds that carry a complete proof.
    pub proven_violations: usize,
}

impl Summary {
    pub fn of(entries: &[ReportEntry]) -> Self {
        let mut s = Summary::default();
        for e in entries {
            match e.verdict {
                Verdict::Match => s.matched += 1,
                Verdict::BoundHolds => s.bound_holds += 1,
                Verdict::BoundTight => s.bound_tight += 1,
                Verdict::Discrepancy => s.discrepancy += 1,
                Verdict::NotApplicable => s.not_applicable += 1,
                Verdict::Skipped => s.skipped += 1,
            }
            if e.is_proven_violation() {
                s.proven_violations += 1;
            }
        }
        s
    }

    pub fn total(&self) -> usize {
        self.matched + self.bound_holds + self.bound_tight + self.discrepancy + self.not_applicable + self.skipped
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ConjectureSummary {
    /// Smallest `γ(G3) - (γ1 + γ2 - 2)` over the evaluated instances.
    pub min_slack: Option<i64>,
    pub min_slack_instance: Option<String>,
    pub counterexamples: Vec<String>,
    /// Instances where `γ(G3) > γ1 + γ2 + 1`.
    pub upper_bound_violations: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub config: Value,
    pub summary: Summary,
    /// False when a scan budget ran out before every instance was evaluated.
    pub complete: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture: Option<ConjectureSummary>,
    pub entries: Vec<ReportEntry>,
}

impl Report {
    /// Sorts entries by id and fills in the summary.
    pub fn new(config: Value, mut entries: Vec<ReportEntry>) -> Self {
        entries.sort_by(|a, b| a.instance_id.cmp(&b.instance_id));
        let summary = Summary::of(&entries);
        Report {
            config,
            complete: summary.skipped == 0,
            summary,
            conjecture: None,
            entries,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON with every `runtime_ms` field removed. Identical configurations
    /// produce identical bytes.
    pub fn canonical_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        strip_runtime(&mut v);
        serde_json::to_string(&v).expect("value serializes")
    }

    pub fn canonical_hash(&self) -> String {
        let digest = Sha256::digest(self.canonical_json().as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn write_json(&self, path: &Path) -> std::io::Result<()> {
        let mut w = BufWriter::new(File::create(path)?);
        serde_json::to_writer_pretty(&mut w, self)?;
        w.write_all(b"\n")?;
        w.flush()
    }

    /// One row per entry.
    pub fn write_csv(&self, path: &Path) -> csv::Result<()> {
        let mut w = csv::Writer::from_path(path)?;
        w.write_record([
            "instance_id",
            "operation",
            "factors",
            "edges",
            "branch",
            "formula",
            "oracle",
            "gamma",
            "witness",
            "verdict",
            "note",
            "runtime_ms",
        ])?;
        for e in &self.entries {
            let oracle = e.oracle.as_ref();
            w.write_record([
                e.instance_id.clone(),
                e.operation.to_string(),
                e.factors.join(" "),
                e.edges.clone().unwrap_or_default(),
                e.branch.map(|b| b.to_string()).unwrap_or_default(),
                e.formula.claim.to_string(),
                oracle.map(|o| o.value.to_string()).unwrap_or_default(),
                oracle.map(|o| o.gamma.to_string()).unwrap_or_default(),
                oracle.map(|o| o.witness.to_string()).unwrap_or_default(),
                e.verdict.to_string(),
                e.note.clone().unwrap_or_default(),
                e.runtime_ms.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn summary_line(&self) -> String {
        let s = &self.summary;
        format!(
            "entries={} match={} bound_holds={} bound_tight={} discrepancy={} not_applicable={} skipped={} proven_violations={}{}",
            self.entries.len(),
            s.matched,
            s.bound_holds,
            s.bound_tight,
            s.discrepancy,
            s.not_applicable,
            s.skipped,
            s.proven_violations,
            if self.complete { "" } else { " (incomplete)" }
        )
    }
}

fn strip_runtime(v: &mut Value) {
    match v {
        Value::Object(map) => {
            map.remove("runtime_ms");
            map.values_mut().for_each(strip_runtime);
        }
        Value::Array(items) => items.iter_mut().for_each(strip_runtime),
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report() {
        let r = Report::new(serde_json::json!({}), vec![]);
        assert_eq!(r.summary, Summary::default());
        assert_eq!(r.summary.total(), 0);
        assert!(r.complete);
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["summary"]["match"], 0);
        assert_eq!(v["entries"], serde_json::json!([]));
    }

    #[test]
    fn runtime_is_stripped() {
        let mut v = serde_json::json!({"a": {"runtime_ms": 3, "b": [{"runtime_ms": 1, "c": 2}]}});
        strip_runtime(&mut v);
        assert_eq!(v, serde_json::json!({"a": {"b": [{"c": 2}]}}));
    }
}
