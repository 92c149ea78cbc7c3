//! The degree-4 row: blow-up of the five-point configuration with a
//! conjugate pair, where sign vectors of even weight combine with the
//! realizable point permutations into a group of order 96.

use cremona::delpezzo::{
    dp4_blowup_group, dp4_point_config, general_position, realizable_point_permutations,
    PointConfig,
};
use cremona::groupkit::GroupElement;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Recorder, RunContext, Suite};
use crate::report::CheckResult;

pub struct Dp4;

impl Suite for Dp4 {
    fn name(&self) -> &'static str {
        "dp4"
    }

    fn describe(&self) -> &'static str {
        "five-point blow-up: even sign vectors and realizable permutations, order 96"
    }

    fn run(&self, ctx: &RunContext) -> Vec<CheckResult> {
        let mut rec = Recorder::new();

        rec.check(
            "dp4.realizable-perms",
            "permutations of the printed five points realized by projectivities",
            "6",
            || {
                let config = dp4_point_config();
                if !general_position(&config).map_err(|e| e.to_string())? {
                    return Err("printed configuration is not in general position".to_string());
                }
                let perms = realizable_point_permutations(&config).map_err(|e| e.to_string())?;
                Ok(perms.order().to_string())
            },
        );

        rec.check(
            "dp4.blowup-order",
            "even sign vectors extended by the realizable permutations",
            "96",
            || {
                let (group, _conj) = dp4_blowup_group();
                Ok(group.order().to_string())
            },
        );

        rec.check(
            "dp4.galois-center",
            "the conjugation element is central and spans the center with the identity",
            "ok",
            || {
                let (group, conj) = dp4_blowup_group();
                if !group.contains(&conj) {
                    return Err("conjugation element not in the group".to_string());
                }
                if group
                    .elements()
                    .iter()
                    .any(|e| e.op(&conj) != conj.op(e))
                {
                    return Err("conjugation element is not central".to_string());
                }
                if group.center().len() != 2 {
                    return Err(format!("center has {} elements", group.center().len()));
                }
                Ok("ok".to_string())
            },
        );

        rec.check(
            "dp4.vector-subgroup",
            "pure sign vectors in the group are exactly the 16 even-weight masks",
            "16",
            || {
                let (group, _conj) = dp4_blowup_group();
                let vectors: Vec<_> = group
                    .elements()
                    .iter()
                    .filter(|e| e.perm().is_identity())
                    .collect();
                if vectors.iter().any(|e| e.mask().count_ones() % 2 != 0) {
                    return Err("an odd-weight mask appears".to_string());
                }
                Ok(vectors.len().to_string())
            },
        );

        rec.check(
            "dp4.rational-two-two",
            "for rational five-point configurations every nonidentity realizable permutation is a double transposition",
            "100/100",
            || {
                let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
                let mut ok = 0;
                for _ in 0..100 {
                    let config = loop {
                        let points: Vec<[i64; 3]> = (0..5)
                            .map(|_| [rng.gen_range(-9..=9), rng.gen_range(-9..=9), 1])
                            .collect();
                        let Ok(candidate) = PointConfig::from_ints(&points) else {
                            continue;
                        };
                        if general_position(&candidate).map_err(|e| e.to_string())? {
                            break candidate;
                        }
                    };
                    let perms =
                        realizable_point_permutations(&config).map_err(|e| e.to_string())?;
                    let all_double_transpositions = perms.elements().iter().all(|p| {
                        let moved = (0..5).filter(|&i| p.image(i) != i).count();
                        p.is_identity() || (moved == 4 && perms.element_order(p) == 2)
                    });
                    if all_double_transpositions {
                        ok += 1;
                    }
                }
                Ok(format!("{ok}/100"))
            },
        );

        rec.finish()
    }
}
