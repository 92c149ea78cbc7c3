//! The degree-2 row: the double cover of the plane branched over a quartic,
//! written in P(2,1,1,1), with three disjoint exceptional curves and a
//! symmetry group of order 48 containing the deck swap.

use cremona::delpezzo::{curves_disjoint, dp2_double_cover, form_invariant_under, surface_contains_curve};
use cremona::exactalg::{rat, Field, Rational};
use cremona::groupkit::FiniteGroup;
use cremona::projlin::ProjMap;

use super::{Recorder, RunContext, Suite};
use crate::report::CheckResult;

fn is_diagonal(class: &ProjMap<Rational>) -> bool {
    let m = class.matrix();
    let n = m.nrows();
    (0..n).all(|i| (0..n).all(|j| i == j || m.at(i, j).is_zero()))
}

pub struct Dp2;

impl Suite for Dp2 {
    fn name(&self) -> &'static str {
        "dp2"
    }

    fn describe(&self) -> &'static str {
        "weighted double cover: sign classes and permutations, order 48"
    }

    fn run(&self, _ctx: &RunContext) -> Vec<CheckResult> {
        let mut rec = Recorder::new();

        rec.check(
            "dp2.curves-on-surface",
            "the three printed curves satisfy the weighted quartic equation",
            "ok",
            || {
                let model = dp2_double_cover();
                for (i, curve) in model.curves.iter().enumerate() {
                    if !surface_contains_curve(&model.surface, curve).map_err(|e| e.to_string())? {
                        return Err(format!("curve {} misses the surface", i + 1));
                    }
                }
                Ok("ok".to_string())
            },
        );

        rec.check(
            "dp2.curves-disjoint",
            "the three printed curves are pairwise disjoint",
            "ok",
            || {
                let model = dp2_double_cover();
                for i in 0..3 {
                    for j in i + 1..3 {
                        if !curves_disjoint(&model.curves[i], &model.curves[j])
                            .map_err(|e| e.to_string())?
                        {
                            return Err(format!("curves {} and {} meet", i + 1, j + 1));
                        }
                    }
                }
                Ok("ok".to_string())
            },
        );

        rec.check(
            "dp2.geiser-invariance",
            "the deck swap w -> -w preserves the equation with scalar 1",
            "ok",
            || {
                let model = dp2_double_cover();
                match form_invariant_under(model.surface.form(), model.deck_swap())
                    .map_err(|e| e.to_string())?
                {
                    Some(lambda) if lambda == rat(1) => Ok("ok".to_string()),
                    Some(lambda) => Err(format!("scalar {lambda}")),
                    None => Err("deck swap does not preserve the form".to_string()),
                }
            },
        );

        rec.check(
            "dp2.closure-order",
            "closure of the printed sign classes and coordinate permutations",
            "48",
            || {
                let model = dp2_double_cover();
                let g = model.symmetry_group().map_err(|e| e.to_string())?;
                Ok(g.order().to_string())
            },
        );

        rec.check(
            "dp2.structure",
            "diagonal sign classes form a normal (Z/2Z)^3 with quotient Sym3",
            "ok",
            || {
                let model = dp2_double_cover();
                let g = model.symmetry_group().map_err(|e| e.to_string())?;
                let diag: Vec<_> = g
                    .elements()
                    .iter()
                    .filter(|e| is_diagonal(e))
                    .cloned()
                    .collect();
                let v = FiniteGroup::from_closed_set(diag).map_err(|e| e.to_string())?;
                if v.order() != 8 {
                    return Err(format!("sign subgroup has order {}", v.order()));
                }
                if !v.is_normal_in(&g).map_err(|e| e.to_string())? {
                    return Err("sign subgroup is not normal".to_string());
                }
                let q = g.coset_action(&v).map_err(|e| e.to_string())?;
                if q.order() != 6 || q.is_abelian() {
                    return Err(format!("quotient has order {}", q.order()));
                }
                Ok("ok".to_string())
            },
        );

        rec.finish()
    }
}
