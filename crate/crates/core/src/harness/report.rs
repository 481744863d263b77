//! JSON reports. Keys keep a fixed order and everything except
//! `runtime_ms` is a pure function of the run's inputs.

use super::HarnessError;
use crate::graph::format::parse_graph6;
use crate::proof::{classify_instance, Statement, Verdict};
use serde::{Deserialize, Serialize};
use std::path::Path;

/// Orders above this are not re-classified when a report is loaded.
pub const REVERIFY_MAX_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerificationReport {
    pub id: String,
    pub k: usize,
    pub n_range: [usize; 2],
    pub filters: Vec<String>,
    pub seed: Option<u64>,
    pub scanned: u64,
    pub hypotheses_ok: u64,
    pub conclusion_ok: u64,
    /// graph6, sorted by canonical form.
    pub exceptions: Vec<String>,
    /// graph6, sorted by canonical form.
    pub counterexamples: Vec<String>,
    pub runtime_ms: u64,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    /// The report with `runtime_ms` zeroed, serialized: equal for identical
    /// inputs.
    pub fn comparable(&self) -> String {
        VerificationReport { runtime_ms: 0, ..self.clone() }.to_json()
    }

    /// Parses without re-verifying the witnesses.
    pub fn parse(text: &str) -> Result<Self, HarnessError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Parses and re-verifies: counts are consistent and every stored
    /// witness classifies again as what it was stored as.
    pub fn load(text: &str) -> Result<Self, HarnessError> {
        let report = Self::parse(text)?;
        report.reverify()?;
        Ok(report)
    }

    pub fn reverify(&self) -> Result<(), HarnessError> {
        let bad = |what: String| Err(HarnessError::Reverify(what));
        let statement: Statement =
            self.id.parse().map_err(|_| HarnessError::Reverify(format!("unknown id {:?}", self.id)))?;
        if self.hypotheses_ok > self.scanned || self.conclusion_ok > self.hypotheses_ok {
            return bad("counts are not nested".into());
        }
        let witnesses = (self.exceptions.len() + self.counterexamples.len()) as u64;
        if self.conclusion_ok + witnesses > self.hypotheses_ok {
            return bad("more witnesses than graphs meeting the hypotheses".into());
        }
        for (list, expected) in [(&self.exceptions, Verdict::Exception), (&self.counterexamples, Verdict::Counterexample)] {
            for s in list {
                let g = parse_graph6(s.as_bytes())?;
                if g.order() > REVERIFY_MAX_ORDER {
                    return bad(format!("witness {s} has {} vertices", g.order()));
                }
                let c = classify_instance(&g, self.k, statement)?;
                if c.verdict != expected {
                    return bad(format!("witness {s} classifies as {:?}, stored as {expected:?}", c.verdict));
                }
            }
        }
        Ok(())
    }
}

pub fn write_report(report: &VerificationReport, destination: &Path) -> Result<(), HarnessError> {
    std::fs::write(destination, report.to_json())?;
    Ok(())
}
