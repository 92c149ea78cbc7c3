//! Report data model and renderers.
//!
//! The JSON layout is a stable contract: `{suite, seed, checks: [{id,
//! paper_ref, expected, actual, status, runtime_ms}], table: [{surface,
//! structure, order, status}]}`.  Everything except `runtime_ms` is
//! deterministic for a fixed seed.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    /// A documented discrepancy in the source text, confirmed by exact
    /// recomputation.  Notes do not fail a run.
    #[serde(rename = "erratum-note")]
    ErratumNote,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ErratumNote => "erratum-note",
        };
        f.write_str(s)
    }
}

/// One exact comparison: `status` is `pass` iff `actual` equals `expected`
/// verbatim.  For erratum notes, `expected` carries the printed claim and
/// `actual` the computed finding.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub paper_ref: String,
    pub expected: String,
    pub actual: String,
    pub status: Status,
    pub runtime_ms: u64,
}

/// One row of the reconstructed maximal-order table.
#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub surface: String,
    pub structure: String,
    pub order: u64,
    pub status: Status,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub table: Vec<TableRow>,
}

impl VerificationReport {
    /// `(pass, fail, erratum-note)` counts over the check list.
    pub fn counts(&self) -> (usize, usize, usize) {
        let mut c = (0, 0, 0);
        for check in &self.checks {
            match check.status {
                Status::Pass => c.0 += 1,
                Status::Fail => c.1 += 1,
                Status::ErratumNote => c.2 += 1,
            }
        }
        c
    }

    pub fn has_failures(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let (pass, fail, notes) = self.counts();
        let mut out = String::new();
        out.push_str("# verification report\n\n");
        out.push_str(&format!(
            "suite: `{}`, seed {}.  checks: {} pass, {} fail, {} erratum notes.\n",
            self.suite, self.seed, pass, fail, notes
        ));
        if !self.table.is_empty() {
            out.push_str("\n| Surface | Structure | Order | Status |\n");
            out.push_str("| --- | --- | --- | --- |\n");
            for row in &self.table {
                out.push_str(&format!(
                    "| {} | {} | {} | {} |\n",
                    row.surface, row.structure, row.order, row.status
                ));
            }
        }
        if !self.checks.is_empty() {
            out.push_str("\n## Checks\n\n");
            for c in &self.checks {
                match c.status {
                    Status::ErratumNote => out.push_str(&format!(
                        "- `{}` {}: printed `{}`; computed: {} — {}\n",
                        c.id, c.status, c.expected, c.actual, c.paper_ref
                    )),
                    _ => out.push_str(&format!(
                        "- `{}` {} ({} ms): expected `{}`, got `{}` — {}\n",
                        c.id, c.status, c.runtime_ms, c.expected, c.actual, c.paper_ref
                    )),
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationReport {
        VerificationReport {
            suite: "dp6".to_string(),
            seed: 1,
            checks: vec![CheckResult {
                id: "dp6.order432".to_string(),
                paper_ref: "degree-6 construction".to_string(),
                expected: "432".to_string(),
                actual: "432".to_string(),
                status: Status::Pass,
                runtime_ms: 3,
            }],
            table: vec![TableRow {
                surface: "dP6".to_string(),
                structure: "(Z/6Z)^2 ⋊ D6".to_string(),
                order: 432,
                status: Status::Pass,
            }],
        }
    }

    #[test]
    fn json_schema_field_order() {
        let json = sample().to_json();
        let suite_at = json.find("\"suite\"").unwrap();
        let seed_at = json.find("\"seed\"").unwrap();
        let checks_at = json.find("\"checks\"").unwrap();
        let table_at = json.find("\"table\"").unwrap();
        assert!(suite_at < seed_at && seed_at < checks_at && checks_at < table_at);
        assert!(json.contains("\"status\": \"pass\""));
        assert!(json.contains("\"runtime_ms\""));
    }

    #[test]
    fn markdown_has_table_columns() {
        let md = sample().to_markdown();
        assert!(md.contains("| Surface | Structure | Order | Status |"));
        assert!(md.contains("| dP6 | (Z/6Z)^2 ⋊ D6 | 432 | pass |"));
    }

    #[test]
    fn empty_report_is_header_only() {
        let report = VerificationReport {
            suite: "dp7".to_string(),
            seed: 1,
            checks: vec![],
            table: vec![],
        };
        let md = report.to_markdown();
        assert!(md.contains("0 pass, 0 fail"));
        assert!(!md.contains("| Surface |"));
        assert!(!md.contains("## Checks"));
    }

    #[test]
    fn erratum_notes_do_not_fail() {
        let mut report = sample();
        report.checks[0].status = Status::ErratumNote;
        assert!(!report.has_failures());
        let (pass, fail, notes) = report.counts();
        assert_eq!((pass, fail, notes), (0, 0, 1));
    }
}
