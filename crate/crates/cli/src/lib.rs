//! Library side of the `jlcert` command-line frontend: b-file handling,
//! OEIS comparison, table export, and the machine-readable report
//! document emitted by every verification command.

pub mod bfile;
pub mod oeis;
pub mod table_io;

use std::collections::BTreeMap;

use serde::Serialize;

use jlcert_core::report::{Check, Status, VerificationReport};

/// Bumped on breaking changes; adding checks bumps the minor only.
pub const REPORT_SCHEMA_VERSION: &str = "1.0";

/// Versioned, machine-readable outcome of one command invocation.
/// Status is the worst over all checks (violation > undecided >
/// verified).
#[derive(Debug, Serialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub status: Status,
    pub checks: Vec<Check>,
}

impl ReportDocument {
    pub fn new(
        command: impl Into<String>,
        parameters: BTreeMap<String, String>,
        report: VerificationReport,
    ) -> Self {
        ReportDocument {
            schema_version: REPORT_SCHEMA_VERSION.to_string(),
            command: command.into(),
            parameters,
            status: report.status,
            checks: report.checks,
        }
    }

    pub fn exit_code(&self) -> i32 {
        oeis::exit_code(self.status)
    }

    /// Plain-text rendering: one line per check, then the aggregate.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{:<40} {:<10} points={} time={}ms\n",
                c.id,
                c.status.to_string(),
                c.points_checked,
                c.duration_ms
            ));
            for f in c.failures.iter().take(10) {
                out.push_str(&format!("    violation: {f}\n"));
            }
            if c.failures.len() > 10 {
                out.push_str(&format!("    ... {} more violations\n", c.failures.len() - 10));
            }
            for u in c.undecided.iter().take(10) {
                out.push_str(&format!("    undecided: {u}\n"));
            }
            for n in &c.notes {
                out.push_str(&format!("    note: {n}\n"));
            }
        }
        out.push_str(&format!("status: {}\n", self.status));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use jlcert_core::report::Method;

    #[test]
    fn report_document_serializes_with_schema() {
        let mut r = VerificationReport::new();
        r.push(Check::new("x", "y", Method::ExactPointwise));
        let doc = ReportDocument::new("verify", BTreeMap::new(), r);
        let json = serde_json::to_string(&doc).unwrap();
        assert!(json.contains("\"schema_version\":\"1.0\""));
        assert!(json.contains("\"status\":\"verified\""));
        assert_eq!(doc.exit_code(), 0);
    }
}
