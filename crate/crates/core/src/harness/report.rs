use std::fmt::Write as _;

use serde::Serialize;

use super::{LemmaReport, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "FAIL",
            Outcome::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    /// Machine-checked records with a skipped (resource) sub-check.
    pub skipped: usize,
    pub external_proof: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub lemmas: Vec<LemmaReport>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(lemmas: Vec<LemmaReport>) -> Self {
        let mut summary = Summary::default();
        for l in &lemmas {
            match (l.status, l.outcome) {
                (Status::ExternalProof, _) => summary.external_proof += 1,
                (_, Outcome::Pass) => summary.passed += 1,
                (_, Outcome::Fail) => summary.failed += 1,
                (_, Outcome::Skipped) => summary.skipped += 1,
            }
        }
        VerificationReport { lemmas, summary }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    /// Drops wall-clock figures so output is reproducible.
    pub fn without_timings(mut self) -> Self {
        for l in &mut self.lemmas {
            l.millis = None;
            for c in &mut l.checks {
                c.millis = None;
            }
        }
        self
    }
}

pub fn render_table(report: &VerificationReport) -> String {
    let mut out = String::new();
    for l in &report.lemmas {
        let time = l.millis.map(|m| format!("  [{m:.1} ms]")).unwrap_or_default();
        let _ = writeln!(out, "{:<8} {}  {}{time}", l.outcome.to_string(), l.id, l.statement);
        for c in &l.checks {
            let time = c.millis.map(|m| format!("  [{m:.1} ms]")).unwrap_or_default();
            let _ = writeln!(out, "    {:<8} {}: {}{time}", c.outcome.to_string(), c.name, c.detail);
        }
        for n in &l.notes {
            let _ = writeln!(out, "    note: {n}");
        }
        for e in &l.external_claims {
            let _ = writeln!(out, "    external: {e}");
        }
    }
    let s = &report.summary;
    let _ = writeln!(
        out,
        "summary: {} machine-checked pass, {} fail, {} skipped (resource), {} external-proof skipped",
        s.passed, s.failed, s.skipped, s.external_proof
    );
    out
}
