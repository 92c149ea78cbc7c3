//! Degree 7 carries no row in the maximal-order table: its surfaces never
//! realize a group competing with the neighbouring degrees, so there is
//! nothing to replay.  The suite exists so `--suite dp7` is a valid (empty)
//! selection.

use super::{RunContext, Suite};
use crate::report::CheckResult;

pub struct Dp7;

impl Suite for Dp7 {
    fn name(&self) -> &'static str {
        "dp7"
    }

    fn describe(&self) -> &'static str {
        "no checks: degree 7 has no entry in the maximal-order table"
    }

    fn run(&self, _ctx: &RunContext) -> Vec<CheckResult> {
        Vec::new()
    }
}
