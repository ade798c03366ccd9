use std::fmt;

use super::{gluing, Decider, ExtensionTrace, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrefixStatus {
    Pass,
    Fail,
    Inconclusive,
    /// The prefix is not a valid complex (containment or mixed dimensions).
    Malformed(String),
}

/// Verdict for the start plus the first `index` added facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixEntry {
    pub index: usize,
    pub status: PrefixStatus,
    /// Whether the step's annotated face sheds the prefix; `None` without annotation.
    pub shedding_ok: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifyReport {
    pub k: usize,
    pub entries: Vec<PrefixEntry>,
}

impl CertifyReport {
    pub fn passed(&self) -> bool {
        self.first_failure().is_none()
    }

    pub fn first_failure(&self) -> Option<&PrefixEntry> {
        self.entries.iter().find(|e| e.status != PrefixStatus::Pass || e.shedding_ok == Some(false))
    }
}

impl fmt::Display for CertifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let status = match &e.status {
                PrefixStatus::Pass => "pass".to_string(),
                PrefixStatus::Fail => "FAIL".to_string(),
                PrefixStatus::Inconclusive => "inconclusive".to_string(),
                PrefixStatus::Malformed(m) => format!("malformed ({m})"),
            };
            let shed = match e.shedding_ok {
                Some(true) => " shed-ok",
                Some(false) => " shed-BAD",
                None => "",
            };
            writeln!(f, "prefix {:>4}: {status}{shed}", e.index)?;
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict}: {} prefixes, k = {}", self.entries.len(), self.k)
    }
}

/// Decides every prefix of `trace` (the start included) for k-decomposability,
/// and checks each shedding annotation against the complex after its step.
pub fn certify_trace(trace: &ExtensionTrace, k: usize, decider: &mut Decider) -> CertifyReport {
    let mut entries = Vec::with_capacity(trace.len() + 1);
    for i in 0..=trace.len() {
        let shed = i.checked_sub(1).and_then(|j| trace.steps()[j].shedding);
        let entry = match trace.prefix(i) {
            Err(e) => PrefixEntry { index: i, status: PrefixStatus::Malformed(e.to_string()), shedding_ok: None },
            Ok(c) => {
                let status = match decider.decide(&c, k) {
                    Verdict::Decomposable(_) => PrefixStatus::Pass,
                    Verdict::NotDecomposable => PrefixStatus::Fail,
                    Verdict::Inconclusive => PrefixStatus::Inconclusive,
                };
                let shedding_ok = shed.map(|f| c.is_pure() && c.has_face(f) && gluing(&c, f));
                PrefixEntry { index: i, status, shedding_ok }
            }
        };
        entries.push(entry);
    }
    CertifyReport { k, entries }
}
