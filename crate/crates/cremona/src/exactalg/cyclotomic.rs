use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::RwLock;

use num_integer::Integer;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use super::{ExactError, Rational, UniPoly};

pub fn euler_phi(n: u32) -> u32 {
    assert!(n > 0);
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result = result / p * (p - 1);
        }
        p += 1;
    }
    if m > 1 {
        result = result / m * (m - 1);
    }
    result
}

static CYCLO_CACHE: Lazy<RwLock<HashMap<u32, UniPoly<Rational>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// The n-th cyclotomic polynomial Phi_n, computed by dividing x^n - 1 by all
/// Phi_d for proper divisors d | n. Cached; exact integer coefficients.
pub fn cyclotomic_polynomial(n: u32) -> UniPoly<Rational> {
    assert!(n > 0, "conductor must be positive");
    if let Some(p) = CYCLO_CACHE.read().unwrap().get(&n) {
        return p.clone();
    }
    let poly = if n == 1 {
        UniPoly::from_ints(&[-1, 1])
    } else {
        let mut num = UniPoly::<Rational>::monomial(n as usize).sub(&UniPoly::one());
        for d in 1..n {
            if n.is_multiple_of(d) {
                let (q, r) = num.divrem(&cyclotomic_polynomial(d));
                debug_assert!(r.is_zero());
                num = q;
            }
        }
        num
    };
    CYCLO_CACHE.write().unwrap().insert(n, poly.clone());
    poly
}

/// An element of Q(zeta_n), stored as the residue of a polynomial in zeta_n
/// modulo Phi_n, i.e. a coefficient vector of length phi(n) in the power
/// basis 1, zeta, ..., zeta^(phi(n)-1).
///
/// Purely rational values always normalize to conductor 1, so rationals
/// compare equal across contexts. Irrational values keep the conductor they
/// were built with; a computation should fix one conductor and stick to it
/// (mixed-conductor arithmetic promotes to the lcm automatically, but
/// structurally distinct representations of the same number in different
/// conductors are not identified).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Cyclotomic {
    n: u32,
    c: Vec<Rational>,
}

impl Cyclotomic {
    fn normalize(n: u32, residue: UniPoly<Rational>) -> Cyclotomic {
        let phi = euler_phi(n) as usize;
        let mut c: Vec<Rational> = residue.coeffs().to_vec();
        c.resize(phi.max(1), Rational::zero());
        if c[1..].iter().all(|x| x.is_zero()) {
            // Rational value: canonical conductor is 1.
            return Cyclotomic {
                n: 1,
                c: vec![c[0].clone()],
            };
        }
        Cyclotomic { n, c }
    }

    pub fn from_rational(q: Rational) -> Cyclotomic {
        Cyclotomic { n: 1, c: vec![q] }
    }

    pub fn from_int(v: i64) -> Cyclotomic {
        Cyclotomic::from_rational(Rational::from_integer(v.into()))
    }

    /// The primitive n-th root of unity zeta_n.
    pub fn zeta(n: u32) -> Cyclotomic {
        Cyclotomic::zeta_pow(n, 1)
    }

    /// zeta_n^k.
    pub fn zeta_pow(n: u32, k: u32) -> Cyclotomic {
        assert!(n > 0, "conductor must be positive");
        let k = (k % n) as usize;
        let mut raw = vec![Rational::zero(); k + 1];
        raw[k] = Rational::one();
        cyclotomic_reduce(n, &raw).expect("positive conductor")
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    /// Coefficients in the power basis of zeta_n.
    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// `Some(q)` iff the value is rational.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.n == 1 {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    fn as_unipoly(&self) -> UniPoly<Rational> {
        UniPoly::new(self.c.clone())
    }

    /// Re-express in Q(zeta_m) where n | m, via zeta_n = zeta_m^(m/n).
    fn promote(&self, m: u32) -> Result<Cyclotomic, ExactError> {
        if self.n == m {
            return Ok(self.clone());
        }
        if !m.is_multiple_of(self.n) {
            return Err(ExactError::ConductorMismatch {
                have: self.n,
                want: m,
            });
        }
        let step = (m / self.n) as usize;
        let mut raw = vec![Rational::zero(); (self.c.len() - 1) * step + 1];
        for (i, coeff) in self.c.iter().enumerate() {
            raw[i * step] = coeff.clone();
        }
        cyclotomic_reduce(m, &raw)
    }

    fn common_conductor(&self, other: &Cyclotomic) -> u32 {
        self.n.lcm(&other.n)
    }

    pub fn inverse(&self) -> Option<Cyclotomic> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            return Some(Cyclotomic::from_rational(q.recip()));
        }
        // Phi_n is irreducible over Q, so gcd(self, Phi_n) = 1 and the
        // Bezout coefficient of self is the inverse.
        let phi_n = cyclotomic_polynomial(self.n);
        let (g, u, _) = self.as_unipoly().ext_gcd(&phi_n);
        debug_assert_eq!(g.degree(), Some(0));
        let scale = g.coeff(0).recip();
        Some(Cyclotomic::normalize(self.n, u.scale(&scale)))
    }
}

/// Reduce a raw coefficient vector in powers of zeta_n (any length; indices
/// beyond n wrap around since zeta_n^n = 1) to a canonical residue mod Phi_n.
pub fn cyclotomic_reduce(n: u32, raw: &[Rational]) -> Result<Cyclotomic, ExactError> {
    if n == 0 {
        return Err(ExactError::ZeroConductor);
    }
    let mut folded = vec![Rational::zero(); n as usize];
    for (i, coeff) in raw.iter().enumerate() {
        let idx = i % n as usize;
        folded[idx] = folded[idx].clone() + coeff.clone();
    }
    let residue = UniPoly::new(folded).rem(&cyclotomic_polynomial(n));
    Ok(Cyclotomic::normalize(n, residue))
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        let m = self.common_conductor(&rhs);
        let a = self.promote(m).expect("lcm conductor");
        let b = rhs.promote(m).expect("lcm conductor");
        Cyclotomic::normalize(m, a.as_unipoly().add(&b.as_unipoly()))
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        self + (-rhs)
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            n: self.n,
            c: self.c.into_iter().map(|x| -x).collect(),
        }
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        let m = self.common_conductor(&rhs);
        let a = self.promote(m).expect("lcm conductor");
        let b = rhs.promote(m).expect("lcm conductor");
        let prod = a.as_unipoly().mul(&b.as_unipoly());
        let residue = prod.rem(&cyclotomic_polynomial(m));
        Cyclotomic::normalize(m, residue)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (i, coeff) in self.c.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{coeff}")?;
            } else if coeff.is_one() {
                write!(f, "z{}^{}", self.n, i)?;
            } else {
                write!(f, "({coeff})*z{}^{}", self.n, i)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The Galois automorphism of Q(zeta_n) with zeta_n -> zeta_n^k, gcd(k,n)=1.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GaloisMap {
    n: u32,
    k: u32,
}

impl GaloisMap {
    pub fn new(n: u32, k: u32) -> Result<GaloisMap, ExactError> {
        if n == 0 {
            return Err(ExactError::ZeroConductor);
        }
        let k = k % n;
        if n == 1 {
            return Ok(GaloisMap { n, k: 0 });
        }
        if k == 0 || n.gcd(&k) != 1 {
            return Err(ExactError::ExponentNotCoprime { n, k });
        }
        Ok(GaloisMap { n, k })
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn exponent(&self) -> u32 {
        self.k
    }

    /// Apply to an element whose conductor divides n (rationals are fixed).
    pub fn apply(&self, x: &Cyclotomic) -> Result<Cyclotomic, ExactError> {
        if !self.n.is_multiple_of(x.n) {
            return Err(ExactError::ConductorMismatch {
                have: x.n,
                want: self.n,
            });
        }
        let mut raw = vec![Rational::zero(); x.n as usize];
        for (i, coeff) in x.c.iter().enumerate() {
            let idx = (i as u64 * self.k as u64 % x.n as u64) as usize;
            raw[idx] = raw[idx].clone() + coeff.clone();
        }
        cyclotomic_reduce(x.n, &raw)
    }

    /// Composition: applying `self` after `other` multiplies exponents mod n.
    pub fn compose(&self, other: &GaloisMap) -> Result<GaloisMap, ExactError> {
        if self.n != other.n {
            return Err(ExactError::ConductorMismatch {
                have: other.n,
                want: self.n,
            });
        }
        GaloisMap::new(self.n, ((self.k as u64 * other.k as u64) % self.n as u64) as u32)
    }
}
