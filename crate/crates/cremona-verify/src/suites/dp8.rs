//! The degree-8 row: the quadric P1 x P1, whose symmetries add the factor
//! exchange on top of the two dihedral actions.

use cremona::groupkit::{product_with_swap, FiniteGroup};

use super::conic::dihedral_12;
use super::{Recorder, RunContext, Suite};
use crate::report::CheckResult;

pub struct Dp8;

impl Suite for Dp8 {
    fn name(&self) -> &'static str {
        "dp8"
    }

    fn describe(&self) -> &'static str {
        "quadric symmetries: (D6 x D6) extended by the factor swap, order 288"
    }

    fn run(&self, _ctx: &RunContext) -> Vec<CheckResult> {
        let mut rec = Recorder::new();

        rec.check(
            "dp8.closure-order",
            "quadric example: two dihedral factors plus the exchange",
            "288",
            || {
                let d6 = dihedral_12()?;
                let h = product_with_swap(&d6, true).map_err(|e| e.to_string())?;
                Ok(h.order().to_string())
            },
        );

        rec.check(
            "dp8.untwisted-normal",
            "the swap-free part is a normal subgroup of index 2",
            "ok",
            || {
                let d6 = dihedral_12()?;
                let h = product_with_swap(&d6, true).map_err(|e| e.to_string())?;
                let untwisted: Vec<_> = h
                    .elements()
                    .iter()
                    .filter(|e| !e.swapped)
                    .cloned()
                    .collect();
                let n = FiniteGroup::from_closed_set(untwisted).map_err(|e| e.to_string())?;
                if n.order() != 144 {
                    return Err(format!("swap-free part has order {}", n.order()));
                }
                if !n.is_normal_in(&h).map_err(|e| e.to_string())? {
                    return Err("swap-free part is not normal".to_string());
                }
                Ok("ok".to_string())
            },
        );

        rec.finish()
    }
}
