//! The degree-5 row: the ten (-1)-classes of the rank-4 lattice form the
//! Petersen-like intersection graph whose automorphism group is Sym5, acting
//! on the five skew quadruples.

use cremona::groupkit::GroupElement;
use cremona::picard::{
    action_on_quadruples, enumerate_minus_one, graph_automorphisms, intersection_graph,
    skew_quadruples, PicClass,
};

use super::{Recorder, RunContext, Suite};
use crate::report::CheckResult;

pub struct Dp5;

impl Suite for Dp5 {
    fn name(&self) -> &'static str {
        "dp5"
    }

    fn describe(&self) -> &'static str {
        "intersection-graph automorphisms Sym5 of order 120 on the rank-4 classes"
    }

    fn run(&self, _ctx: &RunContext) -> Vec<CheckResult> {
        let mut rec = Recorder::new();

        rec.check(
            "dp5.graph-aut-order",
            "automorphisms of the rank-4 intersection graph",
            "120",
            || {
                let classes = enumerate_minus_one(4).map_err(|e| e.to_string())?;
                let adj = intersection_graph(&classes).map_err(|e| e.to_string())?;
                let auts = graph_automorphisms(&adj).map_err(|e| e.to_string())?;
                Ok(auts.order().to_string())
            },
        );

        rec.check(
            "dp5.quadruple-action",
            "the action on the five skew quadruples is faithful onto Sym5",
            "ok",
            || {
                let classes = enumerate_minus_one(4).map_err(|e| e.to_string())?;
                let adj = intersection_graph(&classes).map_err(|e| e.to_string())?;
                let auts = graph_automorphisms(&adj).map_err(|e| e.to_string())?;
                let quads = skew_quadruples(&classes).map_err(|e| e.to_string())?;
                let mut images = Vec::new();
                for sigma in auts.elements() {
                    images.push(action_on_quadruples(sigma, &quads).map_err(|e| e.to_string())?);
                }
                let count = images.len();
                images.sort();
                images.dedup();
                if images.len() != count {
                    return Err("action is not faithful".to_string());
                }
                if count != 120 {
                    return Err(format!("image has order {count}"));
                }
                let id = images[0].op(&images[0].inv());
                if !images.contains(&id) {
                    return Err("image does not contain the identity".to_string());
                }
                Ok("ok".to_string())
            },
        );

        rec.note(
            "dp5.printed-quadruple-note",
            "printed list of the five skew quadruples",
            "{E4, l23, l13, l23}",
            || {
                let classes = enumerate_minus_one(4).map_err(|e| e.to_string())?;
                let quads = skew_quadruples(&classes).map_err(|e| e.to_string())?;
                if quads.len() != 5 {
                    return Err(format!("found {} quadruples", quads.len()));
                }
                // The printed quadruple repeats l23, leaving only three
                // distinct classes; the computed quadruple through E4 must
                // contain l12 instead.
                let line = |i: usize, j: usize| {
                    let mut m = vec![0i64; 4];
                    m[i] = 1;
                    m[j] = 1;
                    PicClass::new(1, m)
                };
                let members = [
                    PicClass::exceptional(4, 3),
                    line(0, 1),
                    line(0, 2),
                    line(1, 2),
                ];
                let mut corrected = [0usize; 4];
                for (slot, class) in members.iter().enumerate() {
                    corrected[slot] = classes
                        .iter()
                        .position(|c| c == class)
                        .ok_or("expected class missing from the enumeration")?;
                }
                corrected.sort();
                let confirmed = quads.contains(&corrected);
                Ok((
                    confirmed,
                    "the printed quadruple repeats l23 and omits l12; the computed quadruple \
                     through E4 is {E4, l12, l13, l23}"
                        .to_string(),
                ))
            },
        );

        rec.finish()
    }
}
