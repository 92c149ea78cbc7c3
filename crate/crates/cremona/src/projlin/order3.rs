use rand::Rng;

use crate::exactalg::{Field, Matrix};

use super::{lift_to_sl, ProjError, ProjMap};

/// Which of the two lifts of a projective class ended up in canonical form:
/// the lift of the class itself or the lift of its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WhichLift {
    Original,
    Inverse,
}

/// Search for a cyclic vector of `a` and return `(M, M^-1 A M)`, where the
/// columns of `M` are `v, Av, ..., A^{n-1}v`. The conjugate is then the
/// companion matrix of the characteristic polynomial.
///
/// Candidates are tried in a deterministic order — standard basis vectors,
/// pairwise sums `e_i + e_j`, then random small-integer vectors from `rng` —
/// so the returned conjugator is reproducible for a fixed seed.
pub fn cyclic_conjugator<F: Field>(
    a: &Matrix<F>,
    rng: &mut impl Rng,
) -> Result<(Matrix<F>, Matrix<F>), ProjError> {
    assert!(a.is_square());
    let n = a.nrows();
    let mut candidates: Vec<Vec<F>> = Vec::new();
    for i in 0..n {
        let mut v = vec![F::zero(); n];
        v[i] = F::one();
        candidates.push(v);
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut v = vec![F::zero(); n];
            v[i] = F::one();
            v[j] = F::one();
            candidates.push(v);
        }
    }
    let try_vector = |v: &[F]| -> Option<(Matrix<F>, Matrix<F>)> {
        let mut cols = vec![v.to_vec()];
        for _ in 1..n {
            cols.push(a.mul_vec(cols.last().unwrap()));
        }
        let m = Matrix::from_cols(cols).expect("square by construction");
        let m_inv = m.inverse()?;
        Some((m.clone(), m_inv.mul(a).mul(&m)))
    };
    for v in &candidates {
        if let Some(found) = try_vector(v) {
            return Ok(found);
        }
    }
    for _ in 0..200 {
        let v: Vec<F> = (0..n).map(|_| F::from_int(rng.gen_range(-10..=10))).collect();
        if let Some(found) = try_vector(&v) {
            return Ok(found);
        }
    }
    Err(ProjError::NoCyclicVector)
}

/// Conjugate an order-3 class in PGL_3 into companion form: returns
/// `(M, B, lambda)` with `M^-1 A M = B = [[0,0,lambda],[1,0,0],[0,1,0]]`,
/// where `A` is the stored representative and `A^3 = lambda * Id`.
///
/// Such a class always admits a cyclic vector: the minimal polynomial of `A`
/// has degree 3 (an irreducible quadratic factor would need a rational
/// eigenvalue partner it cannot have), so the search below cannot fail on
/// valid input.
pub fn companion_order3_pgl3<F: Field>(
    class: &ProjMap<F>,
    rng: &mut impl Rng,
) -> Result<(Matrix<F>, Matrix<F>, F), ProjError> {
    if class.dim() != 3 {
        return Err(ProjError::NotSquare {
            rows: class.dim(),
            cols: class.dim(),
        });
    }
    let got = class.order()?;
    if got != 3 {
        return Err(ProjError::WrongOrder { want: 3, got });
    }
    let a = class.matrix();
    let lambda = a
        .pow(3)
        .as_scalar_multiple_of_identity()
        .ok_or(ProjError::PowerNotScalar { r: 3 })?;
    let (m, b) = cyclic_conjugator(a, rng)?;
    // The characteristic polynomial is x^3 - lambda (eigenvalues are cube
    // roots of lambda closed under conjugation), so the companion form is
    // forced.
    let expected = {
        let mut e = Matrix::from_int_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]).unwrap();
        e.set(0, 2, lambda.clone());
        e
    };
    if b != expected {
        return Err(ProjError::NoCyclicVector);
    }
    Ok((m, b, lambda))
}

/// Canonicalize an order-3 class in PGL_2: lift it (or its inverse) to a
/// unimodular matrix with characteristic polynomial `x^2 + x + 1`, which is
/// conjugate to the companion matrix `[[0,-1],[1,-1]]`. Over the rationals
/// the lift of the class itself always works (its eigenvalues are forced to
/// be the two primitive cube roots of unity); the inverse branch is kept for
/// the sake of stating the dichotomy.
pub fn canonical_order3_pgl2<F: Field>(
    class: &ProjMap<F>,
) -> Result<(Matrix<F>, WhichLift), ProjError> {
    if class.dim() != 2 {
        return Err(ProjError::NotSquare {
            rows: class.dim(),
            cols: class.dim(),
        });
    }
    let got = class.order()?;
    if got != 3 {
        return Err(ProjError::WrongOrder { want: 3, got });
    }
    let a = lift_to_sl(class, 3)?;
    let has_canonical_charpoly =
        |m: &Matrix<F>| m.trace() == F::from_int(-1) && m.det().is_one();
    if has_canonical_charpoly(&a) {
        return Ok((a, WhichLift::Original));
    }
    let a_inv = a.pow(2);
    if has_canonical_charpoly(&a_inv) {
        return Ok((a_inv, WhichLift::Inverse));
    }
    Err(ProjError::WrongOrder { want: 3, got: 1 })
}
