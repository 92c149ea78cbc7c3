use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ExactError, Rational, UniPoly};

/// Shorthand for an integer as a `Rational`.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for the reduced fraction `n/d`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Exact k-th root of an integer, if it exists.
fn integer_nth_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if k.is_multiple_of(2) && n.is_negative() {
        return None;
    }
    let r = n.nth_root(k);
    if num_traits::pow::pow(r.clone(), k as usize) == *n {
        Some(r)
    } else {
        None
    }
}

/// Exact k-th root of a rational, if one exists in Q.
/// For even k the nonnegative root is returned.
pub fn rational_nth_root(q: &Rational, k: u32) -> Option<Rational> {
    assert!(k > 0, "root index must be positive");
    if q.is_zero() {
        return Some(Rational::zero());
    }
    let num = integer_nth_root(q.numer(), k)?;
    let den = integer_nth_root(q.denom(), k)?;
    Some(Rational::new(num, den))
}

/// Exact rational cube root: `Some(c)` iff `c^3 == q`.
pub fn rational_cube_root(q: &Rational) -> Option<Rational> {
    rational_nth_root(q, 3)
}

/// Discriminant of a monic cubic `t^3 + a t^2 + b t + c`, computed by
/// depressing the cubic (t -> t - a/3) and applying `-4p^3 - 27q^2`.
pub fn cubic_discriminant(p: &UniPoly<Rational>) -> Result<Rational, ExactError> {
    if p.degree() != Some(3) {
        return Err(ExactError::WrongDegree {
            want: 3,
            got: p.degree(),
        });
    }
    if !p.is_monic() {
        return Err(ExactError::NotMonic);
    }
    let a = p.coeff(2);
    let depressed = p.shift_var(&(-a / rat(3)));
    debug_assert!(depressed.coeff(2).is_zero());
    let pp = depressed.coeff(1);
    let qq = depressed.coeff(0);
    Ok(rat(-4) * pp.clone() * pp.clone() * pp - rat(27) * qq.clone() * qq)
}

/// All positive divisors of `n` (trial division; intended for the small
/// integers that arise from clearing denominators of test inputs).
fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    assert!(!n.is_zero());
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            large.push(&n / &d);
        }
        d += 1;
    }
    if small.last() == large.last() {
        large.pop();
    }
    large.reverse();
    small.extend(large);
    small
}

/// Does `p` have a rational root? Rational-root theorem after clearing
/// denominators: a root r = s/t in lowest terms needs s | constant and
/// t | leading coefficient.
pub fn has_rational_root(p: &UniPoly<Rational>) -> bool {
    if p.is_zero() {
        return true;
    }
    if p.coeff(0).is_zero() {
        return true; // t = 0
    }
    let mut denom_lcm = BigInt::one();
    for c in p.coeffs() {
        denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    let lead = ints.last().unwrap();
    let constant = &ints[0];
    for s in positive_divisors(constant) {
        for t in positive_divisors(lead) {
            for sign in [1i64, -1] {
                let cand = Rational::new(&s * BigInt::from(sign), t.clone());
                if p.eval(&cand).is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

/// Reducibility criterion for the field-defining sextic attached to a
/// rational parameter `b`: the sextic degenerates exactly when `b^2 = n^3`
/// and `b = m^3 - 3mn` for rationals m, n. Since `b^2 = n^3` forces `b`
/// to be a cube `s^3` (with `n = s^2`), this reduces to a cube test plus a
/// rational-root test on `m^3 - 3 s^2 m - b`.
pub fn sextic_reducibility_criterion(b: &Rational) -> Result<bool, ExactError> {
    if b.is_zero() {
        return Err(ExactError::ZeroInput);
    }
    let s = match rational_cube_root(b) {
        None => return Ok(false),
        Some(s) => s,
    };
    let cubic = UniPoly::new(vec![
        -b.clone(),
        rat(-3) * s.clone() * s,
        Rational::zero(),
        Rational::one(),
    ]);
    Ok(has_rational_root(&cubic))
}
