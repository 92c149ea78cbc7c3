//! Suite registry.
//!
//! A [`Suite`] is a named bundle of checks behind a trait object, so the CLI
//! can select one by `--suite` without a match over every implementation.
//! `all` runs the registry in order; the report is then re-sorted by check
//! id, and the summary table is assembled from the per-surface order checks.

use std::any::Any;
use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use crate::report::{CheckResult, Status, TableRow, VerificationReport};

mod conic;
mod dp1;
mod dp2;
mod dp3;
mod dp4;
mod dp5;
mod dp6;
mod dp7;
mod dp8;
mod dp9;
mod lattice;
mod minkowski;
mod pgl3;

pub struct RunContext {
    pub seed: u64,
    /// Closure cap passed to group enumerations started by the suites.
    pub cap: usize,
}

pub trait Suite {
    fn name(&self) -> &'static str;
    /// One-line description shown by `list`.
    fn describe(&self) -> &'static str;
    fn run(&self, ctx: &RunContext) -> Vec<CheckResult>;
}

/// Every registered suite, in the order `all` executes them.
pub fn registry() -> Vec<Box<dyn Suite>> {
    vec![
        Box::new(minkowski::Minkowski),
        Box::new(pgl3::Pgl3),
        Box::new(lattice::Lattice),
        Box::new(conic::Conic),
        Box::new(dp9::Dp9),
        Box::new(dp8::Dp8),
        Box::new(dp7::Dp7),
        Box::new(dp6::Dp6),
        Box::new(dp5::Dp5),
        Box::new(dp4::Dp4),
        Box::new(dp3::Dp3),
        Box::new(dp2::Dp2),
        Box::new(dp1::Dp1),
    ]
}

/// The nine table rows: surface, structure label, order, and the id of the
/// order check that gates the row's status.
const TABLE: &[(&str, &str, u64, &str)] = &[
    ("conic bundles", "D6 × D6", 144, "conic.product-order"),
    ("dP9", "(Z/2Z)^2 ⋊ Sym3", 24, "dp9.closure-order"),
    ("dP8", "(D6 × D6) ⋊ Z/2Z", 288, "dp8.closure-order"),
    ("dP6", "(Z/6Z)^2 ⋊ D6", 432, "dp6.order432"),
    ("dP5", "Sym5", 120, "dp5.graph-aut-order"),
    ("dP4", "(Z/2Z)^4 ⋊ Sym3", 96, "dp4.blowup-order"),
    ("dP3", "Sym5", 120, "dp3.clebsch-order"),
    ("dP2", "(Z/2Z)^3 ⋊ Sym3", 48, "dp2.closure-order"),
    ("dP1", "D6", 12, "dp1.closure-order"),
];

/// Run one suite (or `all`) and assemble the report.  Unknown names are an
/// error so the CLI can exit with a usage failure.
pub fn run_selection(selection: &str, seed: u64, cap: usize) -> Result<VerificationReport, String> {
    let ctx = RunContext { seed, cap };
    let mut checks = Vec::new();
    let mut matched = false;
    for suite in registry() {
        if selection == "all" || suite.name() == selection {
            matched = true;
            checks.extend(suite.run(&ctx));
        }
    }
    if !matched {
        return Err(format!("unknown suite '{selection}'"));
    }
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    debug_assert!(
        checks.windows(2).all(|w| w[0].id != w[1].id),
        "check ids must be unique"
    );
    let table = TABLE
        .iter()
        .filter_map(|&(surface, structure, order, gate)| {
            checks.iter().find(|c| c.id == gate).map(|c| TableRow {
                surface: surface.to_string(),
                structure: structure.to_string(),
                order,
                status: c.status,
            })
        })
        .collect();
    Ok(VerificationReport {
        suite: selection.to_string(),
        seed,
        checks,
        table,
    })
}

/// Collects check results, timing each body and catching panics so a broken
/// check is recorded rather than killing the run.
pub struct Recorder {
    checks: Vec<CheckResult>,
}

impl Recorder {
    pub fn new() -> Recorder {
        Recorder { checks: Vec::new() }
    }

    /// Run one comparison: pass iff the body returns exactly `expected`.
    pub fn check<F>(&mut self, id: &str, source: &str, expected: &str, body: F)
    where
        F: FnOnce() -> Result<String, String>,
    {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(body));
        let runtime_ms = start.elapsed().as_millis() as u64;
        let (actual, status) = match outcome {
            Ok(Ok(value)) => {
                let status = if value == expected { Status::Pass } else { Status::Fail };
                (value, status)
            }
            Ok(Err(message)) => (message, Status::Fail),
            Err(payload) => (panic_message(payload), Status::Fail),
        };
        self.push(id, source, expected, actual, status, runtime_ms);
    }

    /// Record a documented discrepancy: the body recomputes the printed claim
    /// and returns `(confirmed, finding)`.  A confirmed mismatch becomes an
    /// erratum note; anything else is a failure of the note itself.
    pub fn note<F>(&mut self, id: &str, source: &str, printed: &str, body: F)
    where
        F: FnOnce() -> Result<(bool, String), String>,
    {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(body));
        let runtime_ms = start.elapsed().as_millis() as u64;
        let (actual, status) = match outcome {
            Ok(Ok((true, finding))) => (finding, Status::ErratumNote),
            Ok(Ok((false, finding))) => {
                (format!("discrepancy not confirmed: {finding}"), Status::Fail)
            }
            Ok(Err(message)) => (message, Status::Fail),
            Err(payload) => (panic_message(payload), Status::Fail),
        };
        self.push(id, source, printed, actual, status, runtime_ms);
    }

    fn push(
        &mut self,
        id: &str,
        source: &str,
        expected: &str,
        actual: String,
        status: Status,
        runtime_ms: u64,
    ) {
        self.checks.push(CheckResult {
            id: id.to_string(),
            paper_ref: source.to_string(),
            expected: expected.to_string(),
            actual,
            status,
            runtime_ms,
        });
    }

    pub fn finish(self) -> Vec<CheckResult> {
        self.checks
    }
}

impl Default for Recorder {
    fn default() -> Self {
        Recorder::new()
    }
}

fn panic_message(payload: Box<dyn Any + Send>) -> String {
    if let Some(s) = payload.downcast_ref::<&str>() {
        format!("panic: {s}")
    } else if let Some(s) = payload.downcast_ref::<String>() {
        format!("panic: {s}")
    } else {
        "panic".to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recorder_statuses() {
        let mut rec = Recorder::new();
        rec.check("t.pass", "src", "7", || Ok("7".to_string()));
        rec.check("t.fail", "src", "7", || Ok("8".to_string()));
        rec.check("t.err", "src", "7", || Err("boom".to_string()));
        rec.check("t.panic", "src", "7", || panic!("kaput"));
        rec.note("t.note", "src", "48", || Ok((true, "it is 72".to_string())));
        rec.note("t.badnote", "src", "48", || Ok((false, "it is 48".to_string())));
        let checks = rec.finish();
        let statuses: Vec<Status> = checks.iter().map(|c| c.status).collect();
        assert_eq!(
            statuses,
            vec![
                Status::Pass,
                Status::Fail,
                Status::Fail,
                Status::Fail,
                Status::ErratumNote,
                Status::Fail
            ]
        );
        assert!(checks[3].actual.contains("kaput"));
    }

    #[test]
    fn unknown_selection_is_an_error() {
        assert!(run_selection("nosuch", 1, 1000).is_err());
    }

    #[test]
    fn registry_names_are_unique_and_include_all_surfaces() {
        let names: Vec<&str> = registry().iter().map(|s| s.name()).collect();
        for want in [
            "minkowski", "pgl3", "lattice", "conic", "dp1", "dp2", "dp3", "dp4", "dp5",
            "dp6", "dp7", "dp8", "dp9",
        ] {
            assert!(names.contains(&want), "missing suite {want}");
        }
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len());
    }
}
