//! Picard-lattice enumerations: (-1)-classes, anticanonical pairs, and skew
//! quadruples in the blow-up lattice diag(1, -1, ..., -1).

use cremona::picard::{
    anticanonical_pairs, enumerate_minus_one, enumerate_minus_one_in_box, skew_quadruples,
    PicClass,
};

use super::{Recorder, RunContext, Suite};
use crate::report::CheckResult;

pub struct Lattice;

impl Suite for Lattice {
    fn name(&self) -> &'static str {
        "lattice"
    }

    fn describe(&self) -> &'static str {
        "(-1)-class counts, anticanonical pairs, skew quadruples"
    }

    fn run(&self, _ctx: &RunContext) -> Vec<CheckResult> {
        let mut rec = Recorder::new();

        rec.check(
            "lattice.minus-one-counts",
            "number of (-1)-classes at ranks 3 through 8",
            "6/10/16/27/56/240",
            || {
                let counts: Result<Vec<String>, String> = (3..=8)
                    .map(|r| {
                        enumerate_minus_one(r)
                            .map(|v| v.len().to_string())
                            .map_err(|e| e.to_string())
                    })
                    .collect();
                Ok(counts?.join("/"))
            },
        );

        rec.check(
            "lattice.box-stability",
            "enlarging the search box finds no further (-1)-classes",
            "ok",
            || {
                for r in 3..=6 {
                    let standard = enumerate_minus_one(r).map_err(|e| e.to_string())?;
                    let wider =
                        enumerate_minus_one_in_box(r, 0..=8, -2..=4).map_err(|e| e.to_string())?;
                    if standard != wider {
                        return Err(format!("rank {r}: wider box changes the class list"));
                    }
                }
                Ok("ok".to_string())
            },
        );

        rec.check(
            "lattice.anticanonical-pairs",
            "rank-5 pairs A + B = -K are exactly {L - E_i, 2L - sum of the other E_j}",
            "ok",
            || {
                let got = anticanonical_pairs(5).map_err(|e| e.to_string())?;
                if got.len() != 5 {
                    return Err(format!("found {} pairs", got.len()));
                }
                let mut want = Vec::new();
                for i in 0..5 {
                    let mut line = vec![0i64; 5];
                    line[i] = 1;
                    let conic: Vec<i64> = line.iter().map(|&v| 1 - v).collect();
                    let a = PicClass::new(1, line);
                    let b = PicClass::new(2, conic);
                    want.push(if a <= b { (a, b) } else { (b, a) });
                }
                want.sort();
                if got != want {
                    return Err("pair list differs from the printed family".to_string());
                }
                Ok("ok".to_string())
            },
        );

        rec.check(
            "lattice.skew-quadruples",
            "rank-4 sets of four pairwise disjoint (-1)-classes",
            "5",
            || {
                let classes = enumerate_minus_one(4).map_err(|e| e.to_string())?;
                let quads = skew_quadruples(&classes).map_err(|e| e.to_string())?;
                Ok(quads.len().to_string())
            },
        );

        rec.finish()
    }
}
