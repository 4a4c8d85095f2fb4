//! Structured verification outcomes shared by every scan and certificate.

use serde::Serialize;
use std::fmt;

/// Worst-first ordering: `Violation > Undecided > Verified`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Undecided,
    Violation,
}

impl Status {
    pub fn merge(self, other: Status) -> Status {
        self.max(other)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Verified => write!(f, "verified"),
            Status::Undecided => write!(f, "undecided"),
            Status::Violation => write!(f, "violation"),
        }
    }
}

/// How a check was decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ExactPointwise,
    Interval,
    SymbolicCertificate,
    Enumeration,
}

/// One named check with its region, counters and findings.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: String,
    pub region: String,
    pub method: Method,
    pub status: Status,
    pub points_checked: u64,
    /// Counterexamples / violations, already rendered.
    pub failures: Vec<String>,
    /// Points or claims left undecided at the precision cap.
    pub undecided: Vec<String>,
    /// Informational findings that do not affect the status.
    pub notes: Vec<String>,
    pub duration_ms: u128,
}

impl Check {
    pub fn new(id: impl Into<String>, region: impl Into<String>, method: Method) -> Self {
        Check {
            id: id.into(),
            region: region.into(),
            method,
            status: Status::Verified,
            points_checked: 0,
            failures: Vec::new(),
            undecided: Vec::new(),
            notes: Vec::new(),
            duration_ms: 0,
        }
    }

    pub fn fail(&mut self, msg: impl Into<String>) {
        self.failures.push(msg.into());
        self.status = self.status.merge(Status::Violation);
    }

    pub fn undecided(&mut self, msg: impl Into<String>) {
        self.undecided.push(msg.into());
        self.status = self.status.merge(Status::Undecided);
    }

    pub fn note(&mut self, msg: impl Into<String>) {
        self.notes.push(msg.into());
    }
}

/// Aggregate of many checks; status is the worst of all parts.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub status: Status,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new() -> Self {
        VerificationReport {
            status: Status::Verified,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.status = self.status.merge(check.status);
        self.checks.push(check);
    }

    pub fn merge(&mut self, other: VerificationReport) {
        for c in other.checks {
            self.push(c);
        }
    }

    pub fn total_points(&self) -> u64 {
        self.checks.iter().map(|c| c.points_checked).sum()
    }
}

impl Default for VerificationReport {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_ordering_is_worst_first() {
        assert_eq!(Status::Verified.merge(Status::Undecided), Status::Undecided);
        assert_eq!(Status::Undecided.merge(Status::Violation), Status::Violation);
        assert_eq!(Status::Verified.merge(Status::Verified), Status::Verified);
    }

    #[test]
    fn report_aggregates_worst() {
        let mut r = VerificationReport::new();
        let ok = Check::new("a", "r", Method::ExactPointwise);
        let mut bad = Check::new("b", "r", Method::ExactPointwise);
        bad.undecided("tie at cap");
        r.push(ok);
        r.push(bad);
        assert_eq!(r.status, Status::Undecided);
    }
}
