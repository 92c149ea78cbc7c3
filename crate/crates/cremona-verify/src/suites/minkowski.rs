//! Sharp multiplicative bounds on finite subgroups of GL_n(Q).

use cremona::projlin::minkowski_bound;

use super::{Recorder, RunContext, Suite};
use crate::report::CheckResult;

pub struct Minkowski;

impl Suite for Minkowski {
    fn name(&self) -> &'static str {
        "minkowski"
    }

    fn describe(&self) -> &'static str {
        "multiplicative order bounds for rational matrix groups (n = 3, 4)"
    }

    fn run(&self, _ctx: &RunContext) -> Vec<CheckResult> {
        let mut rec = Recorder::new();
        rec.check(
            "minkowski.m3",
            "order bound for finite subgroups of GL3(Q)",
            "48",
            || Ok(minkowski_bound(3).to_string()),
        );
        rec.check(
            "minkowski.m4",
            "order bound for finite subgroups of GL4(Q), 2^7 * 3^2 * 5",
            "5760",
            || Ok(minkowski_bound(4).to_string()),
        );
        rec.finish()
    }
}
