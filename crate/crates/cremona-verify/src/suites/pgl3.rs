//! Order and canonical-form checks for elements of small projective linear
//! groups over Q, plus the scalar arithmetic they lean on.

use cremona::exactalg::{
    cubic_discriminant, frac, rat, sextic_reducibility_criterion, rational_cube_root, Field,
    Matrix, Rational, UniPoly,
};
use cremona::projlin::{canonical_order3_pgl2, companion_order3_pgl3, coprime_root, cyclic_conjugator, ProjMap};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Recorder, RunContext, Suite};
use crate::report::CheckResult;

pub struct Pgl3;

/// Random small-integer matrix, resampled until invertible.
fn random_invertible(rng: &mut impl Rng, n: usize) -> Matrix<Rational> {
    loop {
        let rows: Vec<Vec<Rational>> = (0..n)
            .map(|_| (0..n).map(|_| rat(rng.gen_range(-3..=3))).collect())
            .collect();
        let m = Matrix::from_rows(rows).expect("square by construction");
        if !m.det().is_zero() {
            return m;
        }
    }
}

/// Companion matrix of `x^3 - lambda`.
fn companion3(lambda: &Rational) -> Matrix<Rational> {
    let mut c = Matrix::from_int_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]).unwrap();
    c.set(0, 2, lambda.clone());
    c
}

/// The two-parameter order-3 family `[[1,a1,a2],[0,0,-1],[0,1,-1]]`.
fn family_member(a1: &Rational, a2: &Rational) -> Matrix<Rational> {
    let mut a = Matrix::from_int_rows(&[&[1, 0, 0], &[0, 0, -1], &[0, 1, -1]]).unwrap();
    a.set(0, 1, a1.clone());
    a.set(0, 2, a2.clone());
    a
}

/// The printed closed-form conjugator for the family: rows
/// `[a1+2a2-1, -2a1-a2-1, a1-a2-1]`, `[-3,3,0]`, `[-3,0,3]`.
fn family_conjugator(a1: &Rational, a2: &Rational) -> Matrix<Rational> {
    let mut m = Matrix::from_int_rows(&[&[0, 0, 0], &[-3, 3, 0], &[-3, 0, 3]]).unwrap();
    m.set(0, 0, a1.clone() + rat(2) * a2.clone() - rat(1));
    m.set(0, 1, rat(-2) * a1.clone() - a2.clone() - rat(1));
    m.set(0, 2, a1.clone() - a2.clone() - rat(1));
    m
}

impl Suite for Pgl3 {
    fn name(&self) -> &'static str {
        "pgl3"
    }

    fn describe(&self) -> &'static str {
        "element orders and order-3 canonical forms in PGL2(Q) and PGL3(Q)"
    }

    fn run(&self, ctx: &RunContext) -> Vec<CheckResult> {
        let mut rec = Recorder::new();

        rec.check(
            "pgl3.order6-element",
            "order-6 class generating the dihedral factor of the conic-bundle group",
            "6",
            || {
                let a = ProjMap::rational(&[&[2, -1], &[1, 1]]);
                Ok(a.order().map_err(|e| e.to_string())?.to_string())
            },
        );

        rec.check(
            "pgl3.companion-random",
            "random order-3 classes conjugate exactly to the companion of x^3 - lambda",
            "200/200",
            || {
                let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
                let lambdas = [rat(1), rat(2), rat(-1), rat(8), rat(-27)];
                let mut ok = 0;
                for i in 0..200 {
                    let lambda = &lambdas[i % lambdas.len()];
                    let c = companion3(lambda);
                    let p = random_invertible(&mut rng, 3);
                    let a = p.mul(&c).mul(&p.inverse().expect("invertible"));
                    let class = ProjMap::new(a.clone()).map_err(|e| e.to_string())?;
                    let (m, b, got) =
                        companion_order3_pgl3(&class, &mut rng).map_err(|e| e.to_string())?;
                    let m_inv = m.inverse().ok_or("conjugator not invertible")?;
                    if got == *lambda && b == c && m_inv.mul(&a).mul(&m) == b {
                        ok += 1;
                    }
                }
                Ok(format!("{ok}/200"))
            },
        );

        rec.check(
            "pgl3.companion-explicit",
            "the order-3 family member at a1 = a2 = 0 reaches companion form",
            "ok",
            || {
                let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
                let a = family_member(&rat(0), &rat(0));
                let class = ProjMap::new(a.clone()).map_err(|e| e.to_string())?;
                let (m, b, lambda) =
                    companion_order3_pgl3(&class, &mut rng).map_err(|e| e.to_string())?;
                if b != companion3(&rat(1)) || !lambda.is_one() {
                    return Err(format!("unexpected companion data: lambda = {lambda}"));
                }
                let m_inv = m.inverse().ok_or("conjugator not invertible")?;
                if m_inv.mul(&a).mul(&m) != b {
                    return Err("conjugation identity fails".to_string());
                }
                Ok("ok".to_string())
            },
        );

        rec.check(
            "pgl3.printed-conjugator",
            "printed closed-form conjugator for the family [[1,a1,a2],[0,0,-1],[0,1,-1]]",
            "21/21",
            || {
                let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
                let mut pairs = vec![(rat(0), rat(0))];
                for _ in 0..20 {
                    pairs.push((
                        frac(rng.gen_range(-6..=6), rng.gen_range(1..=4)),
                        frac(rng.gen_range(-6..=6), rng.gen_range(1..=4)),
                    ));
                }
                let b = companion3(&rat(1));
                let mut ok = 0;
                for (a1, a2) in &pairs {
                    let a = family_member(a1, a2);
                    if a.pow(3) != Matrix::identity(3) {
                        continue;
                    }
                    let m = family_conjugator(a1, a2);
                    if m.det() != rat(-27) {
                        continue;
                    }
                    let m_inv = m.inverse().expect("determinant is -27");
                    if m_inv.mul(&a).mul(&m) == b {
                        ok += 1;
                    }
                }
                Ok(format!("{ok}/{}", pairs.len()))
            },
        );

        rec.check(
            "pgl3.pgl2-canonical",
            "random order-3 classes in PGL2(Q) reach the companion of x^2 + x + 1",
            "100/100",
            || {
                let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
                let s = Matrix::<Rational>::from_int_rows(&[&[0, -1], &[1, -1]]).unwrap();
                let mut ok = 0;
                for _ in 0..100 {
                    let p = random_invertible(&mut rng, 2);
                    let a = p.mul(&s).mul(&p.inverse().expect("invertible"));
                    let class = ProjMap::new(a).map_err(|e| e.to_string())?;
                    let (lift, _which) =
                        canonical_order3_pgl2(&class).map_err(|e| e.to_string())?;
                    if lift.trace() != rat(-1) || !lift.det().is_one() {
                        continue;
                    }
                    let (_m, b) =
                        cyclic_conjugator(&lift, &mut rng).map_err(|e| e.to_string())?;
                    if b == s {
                        ok += 1;
                    }
                }
                Ok(format!("{ok}/100"))
            },
        );

        rec.check(
            "pgl3.cubic-discriminant",
            "discriminant of t^3 - 2t^2 - 1",
            "-59",
            || {
                let f = UniPoly::from_ints(&[-1, 0, -2, 1]);
                Ok(cubic_discriminant(&f).map_err(|e| e.to_string())?.to_string())
            },
        );

        rec.check(
            "pgl3.cube-root-roundtrip",
            "rational cube roots recover the base exactly",
            "100/100",
            || {
                let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
                let mut ok = 0;
                for _ in 0..100 {
                    let q = frac(rng.gen_range(-30..=30), rng.gen_range(1..=12));
                    let cube = q.clone() * q.clone() * q.clone();
                    if rational_cube_root(&cube) == Some(q) {
                        ok += 1;
                    }
                }
                Ok(format!("{ok}/100"))
            },
        );

        rec.check(
            "pgl3.coprime-root-roundtrip",
            "coprime power data a = c^n, b = c^m pins down c",
            "100/100",
            || {
                let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
                let exponents = [(2u32, 3u32), (3, 4), (2, 5), (3, 5), (4, 9), (5, 6)];
                let mut ok = 0;
                for _ in 0..100 {
                    let mut q = rat(0);
                    while q.is_zero() {
                        q = frac(rng.gen_range(-9..=9), rng.gen_range(1..=6));
                    }
                    let (m, n) = exponents[rng.gen_range(0..exponents.len())];
                    let a = q.pow_i(n as i64).expect("nonzero base");
                    let b = q.pow_i(m as i64).expect("nonzero base");
                    match coprime_root(&a, &b, m, n) {
                        Ok(c) if c == q => ok += 1,
                        _ => {}
                    }
                }
                Ok(format!("{ok}/100"))
            },
        );

        rec.check(
            "pgl3.sextic-criterion",
            "the field-defining sextic stays irreducible for b = 1, -2, 8",
            "ok",
            || {
                for b in [rat(1), rat(-2), rat(8)] {
                    if sextic_reducibility_criterion(&b).map_err(|e| e.to_string())? {
                        return Err(format!("criterion unexpectedly accepts b = {b}"));
                    }
                }
                Ok("ok".to_string())
            },
        );

        rec.finish()
    }
}
