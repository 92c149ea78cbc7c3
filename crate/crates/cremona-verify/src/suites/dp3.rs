//! The degree-3 row: cubic surfaces.  The Clebsch-style model in P4 carries
//! a Sym5 of coordinate permutations; the Fermat cubic picks up extra
//! diagonal symmetries over Q(zeta_3); and a (Z/3Z)^2 lives in PGL4(Q).

use std::collections::BTreeMap;

use cremona::delpezzo::{clebsch_cubic, curves_disjoint, fermat_cubic, surface_contains_curve};
use cremona::exactalg::Rational;
use cremona::groupkit::FiniteGroup;
use cremona::projlin::ProjMap;

use super::{Recorder, RunContext, Suite};
use crate::report::CheckResult;

pub struct Dp3;

fn pgl4_generators() -> [ProjMap<Rational>; 2] {
    [
        ProjMap::rational(&[
            &[0, -1, 0, 0],
            &[1, -1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
        ]),
        ProjMap::rational(&[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 0, -1],
            &[0, 0, 1, -1],
        ]),
    ]
}

impl Suite for Dp3 {
    fn name(&self) -> &'static str {
        "dp3"
    }

    fn describe(&self) -> &'static str {
        "cubic surfaces: Sym5 on the P4 model, Fermat closure 648, 3-torsion in PGL4"
    }

    fn run(&self, _ctx: &RunContext) -> Vec<CheckResult> {
        let mut rec = Recorder::new();

        rec.check(
            "dp3.clebsch-curves",
            "both printed lines satisfy both defining equations and are disjoint",
            "ok",
            || {
                let model = clebsch_cubic();
                for curve in &model.curves {
                    if !surface_contains_curve(&model.hyperplane, curve)
                        .map_err(|e| e.to_string())?
                    {
                        return Err("a line misses the hyperplane equation".to_string());
                    }
                    if !surface_contains_curve(&model.cubic, curve).map_err(|e| e.to_string())? {
                        return Err("a line misses the cubic equation".to_string());
                    }
                }
                if !curves_disjoint(&model.curves[0], &model.curves[1])
                    .map_err(|e| e.to_string())?
                {
                    return Err("the printed lines intersect".to_string());
                }
                Ok("ok".to_string())
            },
        );

        rec.check(
            "dp3.clebsch-order",
            "coordinate permutations preserving both equations of the P4 model",
            "120",
            || {
                let model = clebsch_cubic();
                let g = model.symmetry_group().map_err(|e| e.to_string())?;
                Ok(g.order().to_string())
            },
        );

        rec.check(
            "dp3.clebsch-structure",
            "the element-order histogram matches Sym5",
            "ok",
            || {
                let model = clebsch_cubic();
                let g = model.symmetry_group().map_err(|e| e.to_string())?;
                let want: BTreeMap<usize, usize> =
                    [(1, 1), (2, 25), (3, 20), (4, 30), (5, 24), (6, 20)]
                        .into_iter()
                        .collect();
                let got = g.order_histogram();
                if got != want {
                    return Err(format!("histogram {got:?}"));
                }
                Ok("ok".to_string())
            },
        );

        rec.check(
            "dp3.fermat-order",
            "symmetries of the Fermat cubic over Q(zeta_3)",
            "648",
            || {
                let model = fermat_cubic();
                let g = model.symmetry_group().map_err(|e| e.to_string())?;
                Ok(g.order().to_string())
            },
        );

        rec.check(
            "dp3.pgl4-nine",
            "two commuting order-3 classes generate (Z/3Z)^2 in PGL4(Q)",
            "ok",
            || {
                let [a, b] = pgl4_generators();
                let g = FiniteGroup::verify_presentation(
                    &[a, b],
                    &[vec![1, 1, 1], vec![2, 2, 2], vec![1, 2, -1, -2]],
                    9,
                )
                .map_err(|e| e.to_string())?;
                if !g.is_abelian() {
                    return Err("closure is not abelian".to_string());
                }
                let want: BTreeMap<usize, usize> = [(1, 1), (3, 8)].into_iter().collect();
                if g.order_histogram() != want {
                    return Err(format!("histogram {:?}", g.order_histogram()));
                }
                Ok("ok".to_string())
            },
        );

        rec.note(
            "dp3.printed-bound-note",
            "divisibility bound for the Fermat symmetries over Q",
            "|G| <= 2^3 * 3^2 = 48",
            || {
                fn gcd(a: u64, b: u64) -> u64 {
                    if b == 0 {
                        a
                    } else {
                        gcd(b, a % b)
                    }
                }
                let product = 2u64.pow(3) * 3u64.pow(2);
                let common = gcd(648, 2u64.pow(6) * 3u64.pow(2) * 5);
                let confirmed = product == 72 && common == 72 && product != 48;
                Ok((
                    confirmed,
                    "2^3 * 3^2 = 72, and gcd(648, 2^6 * 3^2 * 5) = 72; the printed constant 48 \
                     does not match, though either bound stays below 120"
                        .to_string(),
                ))
            },
        );

        rec.finish()
    }
}
