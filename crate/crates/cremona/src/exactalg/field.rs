use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::numbers::rational_nth_root;
use super::{Cyclotomic, Rational};

/// Common interface for the exact coefficient domains (Q and Q(zeta_n)).
///
/// Values are compared structurally, so `Eq`/`Hash`/`Ord` are usable as map
/// keys; `Ord` is any total order (used for deterministic tie-breaking, not
/// for numeric comparisons in the cyclotomic case).
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + Ord
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Integer power, negative exponents through the inverse.
    /// `None` only when `self` is zero and `e < 0`.
    fn pow_i(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc * base.clone();
        }
        Some(acc)
    }

    /// All solutions of `u^k = 1` in the field this value lives in.
    fn roots_of_unity(&self, k: u32) -> Vec<Self>;

    /// Exact k-th root if one exists in the field.
    fn nth_root(&self, k: u32) -> Option<Self>;
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_int(n: i64) -> Self {
        Rational::from_integer(n.into())
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn roots_of_unity(&self, k: u32) -> Vec<Self> {
        if k.is_multiple_of(2) {
            vec![<Self as Field>::one(), <Self as Field>::from_int(-1)]
        } else {
            vec![<Self as Field>::one()]
        }
    }

    fn nth_root(&self, k: u32) -> Option<Self> {
        rational_nth_root(self, k)
    }
}

impl Field for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::from_rational(Zero::zero())
    }

    fn one() -> Self {
        Cyclotomic::from_rational(One::one())
    }

    fn from_int(n: i64) -> Self {
        Cyclotomic::from_rational(Rational::from_integer(n.into()))
    }

    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }

    fn inv(&self) -> Option<Self> {
        Cyclotomic::inverse(self)
    }

    fn roots_of_unity(&self, k: u32) -> Vec<Self> {
        // Every root of unity in Q(zeta_n) is +-zeta_n^j; filter by u^k = 1.
        let n = self.conductor().max(1);
        let mut out = Vec::new();
        for sign in [1i64, -1] {
            for j in 0..n {
                let u = Cyclotomic::zeta_pow(n, j) * Cyclotomic::from_int(sign);
                if u.pow_i(k as i64) == Some(Field::one()) && !out.contains(&u) {
                    out.push(u);
                }
            }
        }
        out
    }

    fn nth_root(&self, k: u32) -> Option<Self> {
        if let Some(q) = self.as_rational() {
            if let Some(r) = rational_nth_root(&q, k) {
                return Some(Cyclotomic::from_rational(r));
            }
        }
        // Otherwise search the roots of unity of the ambient conductor
        // (callers only take k-th roots of unit scaling factors).
        let n = self.conductor().max(1);
        for sign in [1i64, -1] {
            for j in 0..n {
                let u = Cyclotomic::zeta_pow(n, j) * Cyclotomic::from_int(sign);
                if u.pow_i(k as i64) == Some(self.clone()) {
                    return Some(u);
                }
            }
        }
        None
    }
}
