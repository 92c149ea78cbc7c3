//! The degree-1 row: the surface w^2 = z^3 + F4(x,y)z + F6(x,y) in
//! P(3,1,1,2) whose symmetries live in GL_2 on the plane coordinates and
//! form a D6 of order 12.  The printed list of four (-1)-curves at the
//! sample parameters does not survive recomputation; those findings are
//! recorded as erratum notes, with the containment checker run under both
//! plausible readings of the F6 scaling.

use cremona::delpezzo::{
    curves_disjoint, dp1_model, dp1_stabilizer_check, surface_contains_curve, DelPezzoError,
    SexticGrouping,
};
use cremona::exactalg::{frac, rat};
use cremona::groupkit::FiniteGroup;

use super::{Recorder, RunContext, Suite};
use crate::report::CheckResult;

pub struct Dp1;

impl Suite for Dp1 {
    fn name(&self) -> &'static str {
        "dp1"
    }

    fn describe(&self) -> &'static str {
        "weighted sextic surface: D6 of order 12, curve-list erratum notes"
    }

    fn run(&self, _ctx: &RunContext) -> Vec<CheckResult> {
        let mut rec = Recorder::new();

        rec.check(
            "dp1.closure-order",
            "closure of the two plane symmetries at the sample parameters",
            "12",
            || {
                let model = dp1_model(SexticGrouping::ThreeTermScale, frac(-1, 5), frac(-6, 5));
                let g = model.symmetry_group().map_err(|e| e.to_string())?;
                Ok(g.order().to_string())
            },
        );

        rec.check(
            "dp1.d6-presentation",
            "alpha^6 = beta^2 = id and beta*alpha*beta = alpha^-1 generate 12 elements",
            "ok",
            || {
                let model = dp1_model(SexticGrouping::ThreeTermScale, frac(-1, 5), frac(-6, 5));
                FiniteGroup::verify_presentation(
                    &[model.alpha.clone(), model.beta.clone()],
                    &[vec![1; 6], vec![2, 2], vec![2, 1, 2, 1]],
                    12,
                )
                .map_err(|e| e.to_string())?;
                Ok("ok".to_string())
            },
        );

        rec.check(
            "dp1.plane-stabilizer",
            "the 2x2 plane parts of both generators fix F4 and F6 exactly",
            "ok",
            || {
                let model = dp1_model(SexticGrouping::ThreeTermScale, frac(-1, 5), frac(-6, 5));
                for (label, part) in [
                    ("alpha", model.alpha_plane_part()),
                    ("beta", model.beta_plane_part()),
                ] {
                    if !dp1_stabilizer_check(&part, &model.f4, &model.f6)
                        .map_err(|e| e.to_string())?
                    {
                        return Err(format!("{label} moves F4 or F6"));
                    }
                }
                Ok("ok".to_string())
            },
        );

        rec.check(
            "dp1.scale-family",
            "the group order stays 12 at other nonzero scalars",
            "12",
            || {
                let model = dp1_model(SexticGrouping::ThreeTermScale, rat(7), rat(3));
                let g = model.symmetry_group().map_err(|e| e.to_string())?;
                Ok(g.order().to_string())
            },
        );

        rec.check(
            "dp1.grouping-sensitivity",
            "scaling six sextic terms instead of three breaks the generators unless the scalar is 1",
            "ok",
            || {
                let rescaled = dp1_model(SexticGrouping::SixTermScale, frac(-1, 5), frac(-6, 5));
                match rescaled.symmetry_group() {
                    Err(DelPezzoError::GeneratorBreaksSurface { .. }) => {}
                    Err(e) => return Err(e.to_string()),
                    Ok(_) => {
                        return Err(
                            "the six-term reading unexpectedly preserves the surface".to_string()
                        )
                    }
                }
                let unit = dp1_model(SexticGrouping::SixTermScale, rat(1), frac(-6, 5));
                let g = unit.symmetry_group().map_err(|e| e.to_string())?;
                if g.order() != 12 {
                    return Err(format!("order {} at scalar 1", g.order()));
                }
                Ok("ok".to_string())
            },
        );

        rec.note(
            "dp1.curve-duplication-note",
            "the printed curve list on the degree-1 surface at the sample parameters",
            "four distinct (-1)-curves E1, E2, E3, E4",
            || {
                let model = dp1_model(SexticGrouping::ThreeTermScale, frac(-1, 5), frac(-6, 5));
                let c = &model.curves;
                let confirmed = c[0] == c[2] && c[1] == c[3] && c[0] != c[1];
                Ok((
                    confirmed,
                    "E3 and E4 expand to exactly E1 and E2 (xy(x+y) = x^2y + xy^2); \
                     only two distinct curves are printed"
                        .to_string(),
                ))
            },
        );

        rec.note(
            "dp1.curve-containment-note",
            "the printed curve list on the degree-1 surface at the sample parameters",
            "the surface contains the four printed curves at lambda = -1/5, mu = -6/5",
            || {
                let mut failures = 0usize;
                for grouping in [SexticGrouping::ThreeTermScale, SexticGrouping::SixTermScale] {
                    let model = dp1_model(grouping, frac(-1, 5), frac(-6, 5));
                    for curve in &model.curves {
                        if !surface_contains_curve(&model.surface, curve)
                            .map_err(|e| e.to_string())?
                        {
                            failures += 1;
                        }
                    }
                }
                Ok((
                    failures == 8,
                    format!(
                        "{failures}/8 containment checks fail: no printed parametrization \
                         satisfies the surface equation under either reading of the F6 scaling"
                    ),
                ))
            },
        );

        rec.note(
            "dp1.curve-disjointness-note",
            "the printed curve list on the degree-1 surface at the sample parameters",
            "the four printed curves are pairwise disjoint",
            || {
                let model = dp1_model(SexticGrouping::ThreeTermScale, frac(-1, 5), frac(-6, 5));
                let meet = !curves_disjoint(&model.curves[0], &model.curves[1])
                    .map_err(|e| e.to_string())?;
                Ok((
                    meet,
                    "the two distinct printed curves meet: their components differ only in \
                     the sign of w, which vanishes at [x:y] = [1:0], [0:1], [1:-1]"
                        .to_string(),
                ))
            },
        );

        rec.finish()
    }
}
