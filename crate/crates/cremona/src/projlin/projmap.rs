use std::fmt;

use crate::exactalg::{Field, Matrix, Rational};
use crate::groupkit::GroupElement;

use super::ProjError;

/// Default cap when computing projective orders blindly; no finite subgroup
/// of a plane Cremona group has elements anywhere near this order.
pub const DEFAULT_ORDER_CAP: u32 = 720;

/// A projective linear map, i.e. an invertible matrix up to the scalar
/// reparametrizations of (possibly weighted) projective space. On the
/// weighted space P(w_0, ..., w_{n-1}) the scalar `s` rescales row `i` by
/// `s^{w_i}`; two matrices related this way give the same map.
///
/// The matrix is stored exactly as given — building a `ProjMap` does not
/// normalize it, so checks that care about a specific representative (say,
/// the scalar `lambda` in `A^3 = lambda * Id`) can get at it. Equality and
/// hashing are structural on the stored matrix; the group operations
/// (`op`, `inv`) canonicalize their results, so elements accumulated through
/// group closure always carry the canonical representative. Use
/// [`ProjMap::equiv`] to compare possibly-uncanonical maps as maps.
///
/// The minimal weight is required to be 1. That makes the canonical
/// representative unique without any root-of-unity ambiguity: the first
/// nonzero entry in the first weight-1 row is scaled to 1, which pins the
/// scalar down completely.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ProjMap<F: Field> {
    m: Matrix<F>,
    weights: Vec<u32>,
}

impl<F: Field> ProjMap<F> {
    /// A map of ordinary projective space (all weights 1).
    pub fn new(m: Matrix<F>) -> Result<ProjMap<F>, ProjError> {
        let n = m.nrows();
        ProjMap::new_weighted(m, &vec![1; n])
    }

    pub fn new_weighted(m: Matrix<F>, weights: &[u32]) -> Result<ProjMap<F>, ProjError> {
        if !m.is_square() {
            return Err(ProjError::NotSquare {
                rows: m.nrows(),
                cols: m.ncols(),
            });
        }
        let n = m.nrows();
        if weights.len() != n {
            return Err(ProjError::WeightCountMismatch {
                want: n,
                got: weights.len(),
            });
        }
        if weights.iter().min() != Some(&1) {
            return Err(ProjError::MinWeightNotOne);
        }
        for i in 0..n {
            for j in 0..n {
                if weights[i] != weights[j] && !m.at(i, j).is_zero() {
                    return Err(ProjError::MixesWeights { i, j });
                }
            }
        }
        if m.det().is_zero() {
            return Err(ProjError::NotInvertible);
        }
        Ok(ProjMap {
            m,
            weights: weights.to_vec(),
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<ProjMap<F>, ProjError> {
        let m = Matrix::from_int_rows(rows).map_err(|_| ProjError::NotSquare {
            rows: rows.len(),
            cols: rows.first().map(|r| r.len()).unwrap_or(0),
        })?;
        ProjMap::new(m)
    }

    pub fn identity(n: usize) -> ProjMap<F> {
        ProjMap {
            m: Matrix::identity(n),
            weights: vec![1; n],
        }
    }

    pub fn identity_weighted(weights: &[u32]) -> ProjMap<F> {
        ProjMap::new_weighted(Matrix::identity(weights.len()), weights)
            .expect("identity is a valid weighted map")
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.m
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// Size of the underlying matrix (the projective space has dimension
    /// one less).
    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    /// The canonical representative: scale so that the first nonzero entry
    /// (row-major) among the weight-1 rows becomes 1.
    pub fn canonical(&self) -> ProjMap<F> {
        let n = self.dim();
        let mut pivot = None;
        'outer: for i in 0..n {
            if self.weights[i] != 1 {
                continue;
            }
            for j in 0..n {
                if !self.m.at(i, j).is_zero() {
                    pivot = Some((i, j));
                    break 'outer;
                }
            }
        }
        // An invertible matrix has a nonzero entry in every row, and a
        // weight-1 row exists by the min-weight invariant.
        let (i, j) = pivot.expect("invertible map has a pivot");
        let s = self.m.at(i, j).inv().expect("pivot is nonzero");
        let mut m = self.m.clone();
        for r in 0..n {
            let factor = s.pow_i(self.weights[r] as i64).expect("nonzero scalar");
            m.scale_row(r, &factor);
        }
        ProjMap {
            m,
            weights: self.weights.clone(),
        }
    }

    /// Equality as projective maps (of the same weighted space).
    pub fn equiv(&self, other: &ProjMap<F>) -> bool {
        self.weights == other.weights && self.canonical().m == other.canonical().m
    }

    pub fn is_identity_class(&self) -> bool {
        self.canonical().m == Matrix::identity(self.dim())
    }

    /// Image of a point (as a coordinate vector; no normalization).
    pub fn apply_point(&self, p: &[F]) -> Vec<F> {
        self.m.mul_vec(p)
    }

    /// Projective order: least `k >= 1` with `self^k` the identity map.
    pub fn order_capped(&self, cap: u32) -> Result<u32, ProjError> {
        let id = self.canonical_identity();
        let mut acc = self.canonical();
        let mut k = 1;
        while acc != id {
            if k >= cap {
                return Err(ProjError::OrderCapExceeded { cap });
            }
            acc = acc.op(self);
            k += 1;
        }
        Ok(k)
    }

    pub fn order(&self) -> Result<u32, ProjError> {
        self.order_capped(DEFAULT_ORDER_CAP)
    }

    fn canonical_identity(&self) -> ProjMap<F> {
        ProjMap {
            m: Matrix::identity(self.dim()),
            weights: self.weights.clone(),
        }
    }
}

impl ProjMap<Rational> {
    /// Convenience for integer matrices over the rationals.
    pub fn rational(rows: &[&[i64]]) -> ProjMap<Rational> {
        ProjMap::from_int_rows(rows).expect("valid integer projective map")
    }
}

impl<F: Field> GroupElement for ProjMap<F> {
    fn op(&self, other: &ProjMap<F>) -> ProjMap<F> {
        assert_eq!(self.weights, other.weights, "maps of different spaces");
        ProjMap {
            m: self.m.mul(&other.m),
            weights: self.weights.clone(),
        }
        .canonical()
    }

    fn inv(&self) -> ProjMap<F> {
        ProjMap {
            m: self.m.inverse().expect("projective maps are invertible"),
            weights: self.weights.clone(),
        }
        .canonical()
    }
}

impl<F: Field> fmt::Display for ProjMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.weights.iter().all(|&w| w == 1) {
            write!(f, "{}", self.m)
        } else {
            write!(f, "{} on P{:?}", self.m, self.weights)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::frac;
    use crate::groupkit::FiniteGroup;

    #[test]
    fn scalar_multiples_are_equivalent() {
        let a = ProjMap::<Rational>::rational(&[&[1, 2], &[3, 4]]);
        let b = ProjMap::new(a.matrix().scale(&frac(-7, 3))).unwrap();
        assert!(a.equiv(&b));
        assert_ne!(a, b);
        assert_eq!(a.canonical(), b.canonical());
    }

    #[test]
    fn weighted_scaling() {
        // On P(1, 1, 2), scaling by s multiplies the last row by s^2.
        let weights = [1, 1, 2];
        let a = ProjMap::<Rational>::new_weighted(
            Matrix::from_int_rows(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 12]]).unwrap(),
            &weights,
        )
        .unwrap();
        let b = ProjMap::new_weighted(
            Matrix::from_int_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 3]]).unwrap(),
            &weights,
        )
        .unwrap();
        assert!(a.equiv(&b));
        // diag(2, 2, 4) scales to diag(1, 1, 1): it is the identity map.
        let c = ProjMap::<Rational>::new_weighted(
            Matrix::from_int_rows(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 4]]).unwrap(),
            &weights,
        )
        .unwrap();
        assert!(c.is_identity_class());
    }

    #[test]
    fn construction_rejects_bad_input() {
        let singular = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(
            ProjMap::<Rational>::new(singular).unwrap_err(),
            ProjError::NotInvertible
        );
        let m = Matrix::<Rational>::identity(2);
        assert_eq!(
            ProjMap::new_weighted(m.clone(), &[2, 3]).unwrap_err(),
            ProjError::MinWeightNotOne
        );
        assert_eq!(
            ProjMap::new_weighted(m, &[1, 1, 1]).unwrap_err(),
            ProjError::WeightCountMismatch { want: 2, got: 3 }
        );
        let mixing = Matrix::from_int_rows(&[&[1, 1], &[0, 1]]).unwrap();
        assert_eq!(
            ProjMap::<Rational>::new_weighted(mixing, &[1, 2]).unwrap_err(),
            ProjError::MixesWeights { i: 0, j: 1 }
        );
    }

    #[test]
    fn projective_orders() {
        // [[0,-1],[1,-1]] has order 3 in PGL_2.
        let s = ProjMap::<Rational>::rational(&[&[0, -1], &[1, -1]]);
        assert_eq!(s.order().unwrap(), 3);
        // -Id is the identity in PGL_2.
        let neg = ProjMap::<Rational>::rational(&[&[-1, 0], &[0, -1]]);
        assert_eq!(neg.order().unwrap(), 1);
        // [[1,1],[0,1]] has infinite order; the cap kicks in.
        let shear = ProjMap::<Rational>::rational(&[&[1, 1], &[0, 1]]);
        assert_eq!(
            shear.order_capped(50).unwrap_err(),
            ProjError::OrderCapExceeded { cap: 50 }
        );
    }

    #[test]
    fn group_closure_of_projective_maps() {
        // The order-3 rotation and an involution generate S_3 inside PGL_2.
        let s = ProjMap::<Rational>::rational(&[&[0, -1], &[1, -1]]);
        let t = ProjMap::<Rational>::rational(&[&[0, 1], &[1, 0]]);
        let g = FiniteGroup::closure(&[s, t], 100).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
    }
}
