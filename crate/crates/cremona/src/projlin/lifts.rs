use num_integer::Integer;

use crate::exactalg::{Field, Matrix, MultiPoly};

use super::{ProjError, ProjMap};

/// Given `a^m = b^n` with `gcd(m, n) = 1`, produce the unique `c` with
/// `c^n = a` and `c^m = b`, namely `c = a^x b^y` for any Bezout pair
/// `n x + m y = 1`.
pub fn coprime_root<F: Field>(a: &F, b: &F, m: u32, n: u32) -> Result<F, ProjError> {
    if m == 0 || n == 0 || m.gcd(&n) != 1 {
        return Err(ProjError::NotCoprime { a: m, b: n });
    }
    let am = a.pow_i(m as i64).expect("positive power");
    let bn = b.pow_i(n as i64).expect("positive power");
    if am != bn {
        return Err(ProjError::IncompatiblePowers);
    }
    if a.is_zero() {
        // Then b is zero too (fields have no zero divisors), and c = 0.
        return Ok(F::zero());
    }
    let eg = (n as i64).extended_gcd(&(m as i64));
    debug_assert_eq!(eg.gcd, 1);
    let c = a.pow_i(eg.x).expect("a is nonzero") * b.pow_i(eg.y).expect("b is nonzero");
    debug_assert_eq!(c.pow_i(n as i64), Some(a.clone()));
    debug_assert_eq!(c.pow_i(m as i64), Some(b.clone()));
    Ok(c)
}

/// Lift a projective class of order dividing `r` (so `B^r = lambda * Id` for
/// any representative `B`) to an honest matrix `A` with `A^r = Id` and
/// `det A = 1`, provided `gcd(r, n) = 1` where `n` is the matrix size.
/// The lift is `A = B / mu` with `mu^n = det B` and `mu^r = lambda`.
pub fn lift_to_sl<F: Field>(class: &ProjMap<F>, r: u32) -> Result<Matrix<F>, ProjError> {
    assert!(
        class.weights().iter().all(|&w| w == 1),
        "unimodular lifts live on ordinary projective space"
    );
    let n = class.dim() as u32;
    if r == 0 || r.gcd(&n) != 1 {
        return Err(ProjError::NotCoprime { a: r, b: n });
    }
    let b = class.matrix();
    let lambda = b
        .pow(r)
        .as_scalar_multiple_of_identity()
        .ok_or(ProjError::PowerNotScalar { r })?;
    let delta = b.det();
    // det(B^r) = det(lambda * Id) gives delta^r = lambda^n.
    let mu = coprime_root(&delta, &lambda, r, n)?;
    let a = b.scale(&mu.inv().ok_or(ProjError::NotInvertible)?);
    debug_assert!(a.det().is_one());
    debug_assert_eq!(a.pow(r), Matrix::identity(n as usize));
    Ok(a)
}

/// Given a matrix `rep` that preserves a nonzero homogeneous form up to a
/// scalar (`form o rep = lambda * form`), rescale it so the form is
/// preserved on the nose: returns the pair `(M, -M)` with `M = rep / c`,
/// `c^d = lambda` (`d` the degree of the form). Requires `gcd(d, m) = 1`
/// where `m` is the projective order of `rep`; the scalar `c` comes out of
/// a Bezout identity between `d` and `m`. For even `d` both returned
/// matrices preserve the form; for odd `d` the second one negates it.
pub fn lift_form_preserving<F: Field>(
    rep: &Matrix<F>,
    form: &MultiPoly<F>,
) -> Result<(Matrix<F>, Matrix<F>), ProjError> {
    let n = form.table().len();
    if rep.nrows() != n || rep.ncols() != n {
        return Err(ProjError::NotSquare {
            rows: rep.nrows(),
            cols: rep.ncols(),
        });
    }
    let d = match form.weighted_degree() {
        Some(d) if d > 0 && form.is_weighted_homogeneous() => d,
        _ => return Err(ProjError::NotInvariant),
    };
    let composed = form
        .compose_linear(rep)
        .map_err(|_| ProjError::NotInvariant)?;
    let lambda = form.ratio_to(&composed).ok_or(ProjError::NotInvariant)?;
    if lambda.is_zero() {
        return Err(ProjError::NotInvertible);
    }
    let class = ProjMap::new(rep.clone())?;
    let m = class.order()?;
    let mu = rep
        .pow(m)
        .as_scalar_multiple_of_identity()
        .ok_or(ProjError::PowerNotScalar { r: m })?;
    // Iterating form o rep = lambda * form over one full projective period
    // gives lambda^m = mu^d.
    let c = coprime_root(&lambda, &mu, m, d)?;
    let scaled = rep.scale(&c.inv().ok_or(ProjError::NotInvertible)?);
    debug_assert_eq!(
        form.ratio_to(&form.compose_linear(&scaled).expect("same dimensions")),
        Some(F::one())
    );
    Ok((scaled.clone(), scaled.neg()))
}
