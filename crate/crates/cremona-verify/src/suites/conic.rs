//! The conic-bundle row: two independent dihedral actions, one on the base
//! and one on the fibers, with no exchange available over the base field.

use cremona::exactalg::Rational;
use cremona::groupkit::{product_with_swap, FiniteGroup};
use cremona::projlin::ProjMap;

use super::{Recorder, RunContext, Suite};
use crate::report::CheckResult;

/// The dihedral group of order 12 in PGL2(Q), generated by an order-6
/// rotation class and a swap, with its presentation verified.
pub(super) fn dihedral_12() -> Result<FiniteGroup<ProjMap<Rational>>, String> {
    let a = ProjMap::rational(&[&[2, -1], &[1, 1]]);
    let b = ProjMap::rational(&[&[0, 1], &[1, 0]]);
    FiniteGroup::verify_presentation(
        &[a, b],
        &[vec![1; 6], vec![2, 2], vec![2, 1, 2, 1]],
        12,
    )
    .map_err(|e| e.to_string())
}

pub struct Conic;

impl Suite for Conic {
    fn name(&self) -> &'static str {
        "conic"
    }

    fn describe(&self) -> &'static str {
        "conic-bundle symmetry group D6 x D6 of order 144"
    }

    fn run(&self, _ctx: &RunContext) -> Vec<CheckResult> {
        let mut rec = Recorder::new();

        rec.check(
            "conic.d6-presentation",
            "dihedral factor <a, b | a^6 = b^2 = (ba)^2 = 1> in PGL2(Q)",
            "ok",
            || {
                dihedral_12()?;
                Ok("ok".to_string())
            },
        );

        rec.check(
            "conic.product-order",
            "conic-bundle example: the direct product of two dihedral factors",
            "144",
            || {
                let d6 = dihedral_12()?;
                let h = product_with_swap(&d6, false).map_err(|e| e.to_string())?;
                Ok(h.order().to_string())
            },
        );

        rec.finish()
    }
}
