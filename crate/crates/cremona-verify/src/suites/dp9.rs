//! The degree-9 row: the plane itself, where the maximal group is generated
//! by two diagonal sign classes and the coordinate permutations.

use cremona::exactalg::{Field, Rational};
use cremona::groupkit::FiniteGroup;
use cremona::projlin::ProjMap;

use super::{Recorder, RunContext, Suite};
use crate::report::CheckResult;

fn generators() -> [ProjMap<Rational>; 3] {
    [
        ProjMap::rational(&[&[-1, 0, 0], &[0, -1, 0], &[0, 0, 1]]),
        ProjMap::rational(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]),
        ProjMap::rational(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]),
    ]
}

fn is_diagonal(class: &ProjMap<Rational>) -> bool {
    let m = class.matrix();
    let n = m.nrows();
    (0..n).all(|i| (0..n).all(|j| i == j || m.at(i, j).is_zero()))
}

pub struct Dp9;

impl Suite for Dp9 {
    fn name(&self) -> &'static str {
        "dp9"
    }

    fn describe(&self) -> &'static str {
        "plane symmetries: (Z/2Z)^2 extended by coordinate permutations, order 24"
    }

    fn run(&self, ctx: &RunContext) -> Vec<CheckResult> {
        let mut rec = Recorder::new();

        rec.check(
            "dp9.generator-orders",
            "sign classes of order 2 and a coordinate 3-cycle",
            "2/2/3",
            || {
                let orders: Result<Vec<String>, String> = generators()
                    .iter()
                    .map(|g| {
                        g.order()
                            .map(|o| o.to_string())
                            .map_err(|e| e.to_string())
                    })
                    .collect();
                Ok(orders?.join("/"))
            },
        );

        rec.check(
            "dp9.closure-order",
            "closure of the printed plane generators",
            "24",
            || {
                let g = FiniteGroup::closure(&generators(), ctx.cap).map_err(|e| e.to_string())?;
                Ok(g.order().to_string())
            },
        );

        rec.check(
            "dp9.structure",
            "diagonal classes form a normal (Z/2Z)^2 with quotient Sym3",
            "ok",
            || {
                let g = FiniteGroup::closure(&generators(), ctx.cap).map_err(|e| e.to_string())?;
                let diag: Vec<_> = g
                    .elements()
                    .iter()
                    .filter(|e| is_diagonal(e))
                    .cloned()
                    .collect();
                let v = FiniteGroup::from_closed_set(diag).map_err(|e| e.to_string())?;
                if v.order() != 4 {
                    return Err(format!("diagonal subgroup has order {}", v.order()));
                }
                if !v.is_normal_in(&g).map_err(|e| e.to_string())? {
                    return Err("diagonal subgroup is not normal".to_string());
                }
                let quotient = g.coset_action(&v).map_err(|e| e.to_string())?;
                if quotient.order() != 6 {
                    return Err(format!("quotient has order {}", quotient.order()));
                }
                if quotient.is_abelian() {
                    return Err("quotient is abelian, expected Sym3".to_string());
                }
                Ok("ok".to_string())
            },
        );

        rec.finish()
    }
}
