//! The degree-6 row: the hexagon surface, whose symmetry group of order 432
//! is the mu_6 x mu_6 torus extended by the hexagon's dihedral symmetries,
//! all commuting with a semilinear factor exchange.

use cremona::delpezzo::{galois_twist_6, hexagon_group, semilinear_commutes, torus_centralizer, HexAut};
use cremona::groupkit::{FiniteGroup, Perm};

use super::{Recorder, RunContext, Suite};
use crate::report::CheckResult;

pub struct Dp6;

impl Suite for Dp6 {
    fn name(&self) -> &'static str {
        "dp6"
    }

    fn describe(&self) -> &'static str {
        "hexagon surface: (Z/6Z)^2 extended by D6, order 432, twist centralizers"
    }

    fn run(&self, _ctx: &RunContext) -> Vec<CheckResult> {
        let mut rec = Recorder::new();

        rec.check(
            "dp6.order432",
            "degree-6 construction: torus extended by the hexagon symmetries",
            "432",
            || {
                let g = hexagon_group().map_err(|e| e.to_string())?;
                Ok(g.order().to_string())
            },
        );

        rec.check(
            "dp6.torus-structure",
            "the torus part is normal of order 36 and exponent 6",
            "ok",
            || {
                let g = hexagon_group().map_err(|e| e.to_string())?;
                let torus: Vec<HexAut> = g
                    .elements()
                    .iter()
                    .filter(|h| h.is_torus())
                    .cloned()
                    .collect();
                let t = FiniteGroup::from_closed_set(torus).map_err(|e| e.to_string())?;
                if t.order() != 36 {
                    return Err(format!("torus has order {}", t.order()));
                }
                if t.exponent() != 6 {
                    return Err(format!("torus has exponent {}", t.exponent()));
                }
                if !t.is_normal_in(&g).map_err(|e| e.to_string())? {
                    return Err("torus is not normal".to_string());
                }
                Ok("ok".to_string())
            },
        );

        rec.check(
            "dp6.quotient-order",
            "the hexagon action on torus cosets has order 12",
            "12",
            || {
                let g = hexagon_group().map_err(|e| e.to_string())?;
                let torus: Vec<HexAut> = g
                    .elements()
                    .iter()
                    .filter(|h| h.is_torus())
                    .cloned()
                    .collect();
                let t = FiniteGroup::from_closed_set(torus).map_err(|e| e.to_string())?;
                let q = g.coset_action(&t).map_err(|e| e.to_string())?;
                Ok(q.order().to_string())
            },
        );

        rec.check(
            "dp6.twist-commutes",
            "every linear symmetry commutes with the semilinear factor exchange",
            "432/432",
            || {
                let g = hexagon_group().map_err(|e| e.to_string())?;
                let twist = galois_twist_6();
                let mut ok = 0;
                for h in g.elements() {
                    if semilinear_commutes(h, &twist).map_err(|e| e.to_string())? {
                        ok += 1;
                    }
                }
                Ok(format!("{ok}/{}", g.order()))
            },
        );

        rec.check(
            "dp6.twist-centralizer",
            "torus elements commuting with the conductor-6 twist",
            "36",
            || {
                let fixed = torus_centralizer(6, &galois_twist_6()).map_err(|e| e.to_string())?;
                Ok(fixed.len().to_string())
            },
        );

        rec.check(
            "dp6.centralizer-bound-18",
            "at conductor 18, transposition and 3-cycle images centralize at most 18 torus elements",
            "50/50",
            || {
                let hex_images = [
                    Perm::transposition(3, 0, 1),
                    Perm::transposition(3, 0, 2),
                    Perm::transposition(3, 1, 2),
                    Perm::from_images(vec![2, 0, 1]),
                    Perm::from_images(vec![1, 2, 0]),
                ];
                let mut within = 0;
                let mut cases = 0;
                for delta in &hex_images {
                    for exchange in [false, true] {
                        for k in [5u32, 7, 11, 13, 17] {
                            let g = HexAut::new(18, 0, 0, delta.clone(), exchange, k)
                                .map_err(|e| e.to_string())?;
                            let fixed = torus_centralizer(18, &g).map_err(|e| e.to_string())?;
                            cases += 1;
                            if fixed.len() <= 18 {
                                within += 1;
                            }
                        }
                    }
                }
                Ok(format!("{within}/{cases}"))
            },
        );

        rec.finish()
    }
}
