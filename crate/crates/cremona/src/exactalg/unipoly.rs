use super::Field;

/// Dense univariate polynomial over a field; `c[i]` is the coefficient of
/// `x^i` and the top coefficient is always nonzero (zero = empty vector).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniPoly<F: Field> {
    c: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(mut c: Vec<F>) -> Self {
        while c.last().map(|x| x.is_zero()).unwrap_or(false) {
            c.pop();
        }
        UniPoly { c }
    }

    pub fn zero() -> Self {
        UniPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly { c: vec![F::one()] }
    }

    pub fn constant(v: F) -> Self {
        Self::new(vec![v])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![F::zero(); k + 1];
        c[k] = F::one();
        UniPoly { c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&n| F::from_int(n)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.c
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> F {
        self.c.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&F> {
        self.c.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map(|l| l.is_one()).unwrap_or(false)
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.c.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.c.len().max(other.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.coeff(i) + other.coeff(i));
        }
        Self::new(c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.c.len().max(other.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.coeff(i) - other.coeff(i));
        }
        Self::new(c)
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            c: self.c.iter().cloned().map(|x| -x).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut c = vec![F::zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                c[i + j] = c[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(c)
    }

    pub fn scale(&self, s: &F) -> Self {
        Self::new(self.c.iter().map(|x| x.clone() * s.clone()).collect())
    }

    /// Euclidean division; panics on division by zero.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        let dlead = divisor.leading().expect("division by zero polynomial");
        let dinv = dlead.inv().expect("leading coefficient is a unit");
        let ddeg = divisor.degree().unwrap();
        let mut rem = self.clone();
        let mut quot = vec![F::zero(); self.c.len().saturating_sub(ddeg)];
        while let Some(rdeg) = rem.degree() {
            if rdeg < ddeg {
                break;
            }
            let factor = rem.leading().unwrap().clone() * dinv.clone();
            let shift = rdeg - ddeg;
            quot[shift] = factor.clone();
            // rem -= factor * x^shift * divisor
            let mut c = rem.c.clone();
            for (j, b) in divisor.c.iter().enumerate() {
                c[shift + j] = c[shift + j].clone() - factor.clone() * b.clone();
            }
            rem = Self::new(c);
        }
        (Self::new(quot), rem)
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.divrem(divisor).1
    }

    pub fn make_monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Extended gcd: returns `(g, u, v)` with `u*self + v*other = g`, g monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (Self::one(), Self::zero());
        let (mut v0, mut v1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let u = u0.sub(&q.mul(&u1));
            let v = v0.sub(&q.mul(&v1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u;
            v0 = v1;
            v1 = v;
        }
        match r0.leading().cloned() {
            None => (Self::zero(), Self::zero(), Self::zero()),
            Some(l) => {
                let s = l.inv().expect("nonzero leading coefficient");
                let s = Self::constant(s);
                (r0.mul(&s), u0.mul(&s), v0.mul(&s))
            }
        }
    }

    /// Substitute `x -> x + r` (used e.g. to depress a cubic).
    pub fn shift_var(&self, r: &F) -> Self {
        // Horner: p(x + r) built from the top coefficient down.
        let mut acc = Self::zero();
        let xr = Self::new(vec![r.clone(), F::one()]);
        for c in self.c.iter().rev() {
            acc = acc.mul(&xr).add(&Self::constant(c.clone()));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, Rational};
    use super::*;

    fn p(c: &[i64]) -> UniPoly<Rational> {
        UniPoly::from_ints(c)
    }

    #[test]
    fn divrem_roundtrip() {
        let a = p(&[1, 0, -3, 2, 5]);
        let b = p(&[2, 1, 1]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap() < b.degree().unwrap());
    }

    #[test]
    fn gcd_of_products() {
        let f = p(&[-1, 1]); // x - 1
        let g = p(&[1, 1]); // x + 1
        let a = f.mul(&g);
        let b = f.mul(&p(&[3, 1]));
        assert_eq!(a.gcd(&b), f.make_monic());
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = p(&[1, 2, 1]);
        let b = p(&[-1, 1]);
        let (g, u, v) = a.ext_gcd(&b);
        assert_eq!(u.mul(&a).add(&v.mul(&b)), g);
        assert!(g.is_monic());
    }

    #[test]
    fn shift_then_eval() {
        let f = p(&[1, -2, 0, 1]); // x^3 - 2x + 1
        let g = f.shift_var(&rat(3));
        assert_eq!(g.eval(&rat(0)), f.eval(&rat(3)));
        assert_eq!(g.eval(&rat(-1)), f.eval(&rat(2)));
    }
}
