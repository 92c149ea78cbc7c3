use crate::exactalg::{Field, Matrix, MultiPoly, UniPoly};
use crate::groupkit::FiniteGroup;
use crate::projlin::ProjMap;

use super::DelPezzoError;

/// A hypersurface in a weighted projective space, given by one
/// weighted-homogeneous polynomial (the weights live in its variable table).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedHypersurface<F: Field> {
    form: MultiPoly<F>,
    degree: u32,
}

impl<F: Field> WeightedHypersurface<F> {
    pub fn new(form: MultiPoly<F>) -> Result<WeightedHypersurface<F>, DelPezzoError> {
        match form.weighted_degree() {
            Some(degree) if form.is_weighted_homogeneous() => {
                Ok(WeightedHypersurface { form, degree })
            }
            _ => Err(DelPezzoError::NotWeightedHomogeneous),
        }
    }

    pub fn form(&self) -> &MultiPoly<F> {
        &self.form
    }

    pub fn weights(&self) -> &[u32] {
        self.form.table().weights()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }
}

/// A rational curve in a weighted projective space, given per ambient
/// coordinate by a binary form in the parameters `(a, b)`: the coordinate of
/// weight `w` gets a form of degree `w` (or zero).  The forms must not all
/// vanish at a common parameter value, so the image point is defined
/// everywhere on the parameter line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamCurve<F: Field> {
    weights: Vec<u32>,
    components: Vec<MultiPoly<F>>,
}

impl<F: Field> ParamCurve<F> {
    pub fn new(
        weights: Vec<u32>,
        components: Vec<MultiPoly<F>>,
    ) -> Result<ParamCurve<F>, DelPezzoError> {
        if weights.is_empty() || weights.len() != components.len() {
            return Err(DelPezzoError::IllFormedCurve(format!(
                "{} components for {} coordinates",
                components.len(),
                weights.len()
            )));
        }
        let table = components[0].table().clone();
        if table.len() != 2 || table.weights() != [1, 1] {
            return Err(DelPezzoError::IllFormedCurve(
                "components must be binary forms in the parameters".into(),
            ));
        }
        for (c, &w) in components.iter().zip(&weights) {
            if c.table() != &table {
                return Err(DelPezzoError::IllFormedCurve(
                    "components use different parameter tables".into(),
                ));
            }
            if !c.is_zero() && !c.is_weighted_homogeneous_of_degree(w) {
                return Err(DelPezzoError::IllFormedCurve(format!(
                    "component of weight-{w} coordinate must have degree {w}"
                )));
            }
        }
        let nonzero: Vec<&MultiPoly<F>> = components.iter().filter(|c| !c.is_zero()).collect();
        if nonzero.is_empty() || forms_share_a_root(&nonzero) {
            return Err(DelPezzoError::IllFormedCurve(
                "components vanish simultaneously at some parameter".into(),
            ));
        }
        Ok(ParamCurve { weights, components })
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn components(&self) -> &[MultiPoly<F>] {
        &self.components
    }
}

/// Dehomogenize a binary form at `second variable = 1`.
fn dehomogenize<F: Field>(f: &MultiPoly<F>) -> UniPoly<F> {
    let d = f.weighted_degree().unwrap_or(0) as usize;
    let mut coeffs = vec![F::zero(); d + 1];
    for (exps, c) in f.terms() {
        coeffs[exps[0] as usize] = c.clone();
    }
    UniPoly::new(coeffs)
}

/// Whether a family of nonzero binary forms has a common root over the
/// algebraic closure.  A common root at `[1:0]` means every form misses its
/// pure-first-variable term; common affine roots show up as a nonconstant
/// gcd of the dehomogenizations (the Euclidean gcd is unchanged by field
/// extension, so a nonconstant gcd has all its roots in the closure).
fn forms_share_a_root<F: Field>(forms: &[&MultiPoly<F>]) -> bool {
    let at_infinity = forms.iter().all(|f| {
        let d = f.weighted_degree().expect("nonzero form");
        f.coeff(&[d, 0]).is_zero()
    });
    if at_infinity {
        return true;
    }
    let mut g = dehomogenize(forms[0]);
    for f in &forms[1..] {
        g = g.gcd(&dehomogenize(f));
        if g.degree() == Some(0) {
            return false;
        }
    }
    g.degree().is_some_and(|d| d >= 1)
}

/// True iff substituting the parametrization into the defining polynomial
/// gives the zero polynomial.
pub fn surface_contains_curve<F: Field>(
    surface: &WeightedHypersurface<F>,
    curve: &ParamCurve<F>,
) -> Result<bool, DelPezzoError> {
    if surface.weights() != curve.weights() {
        return Err(DelPezzoError::WeightMismatch);
    }
    Ok(surface.form().substitute(curve.components())?.is_zero())
}

/// Reduced row echelon form; returns a basis of the null space.
fn null_space<F: Field>(mut rows: Vec<Vec<F>>, cols: usize) -> Vec<Vec<F>> {
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) {
            rows.swap(r, p);
            let inv = rows[r][c].inv().expect("nonzero pivot");
            for x in rows[r].iter_mut() {
                *x = x.clone() * inv.clone();
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && !row[c].is_zero() {
                    let factor = row[c].clone();
                    for (x, p) in row.iter_mut().zip(&pivot_row) {
                        *x = x.clone() - p.clone() * factor.clone();
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![F::zero(); cols];
        v[free] = F::one();
        for (row, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = F::zero() - rows[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// The 2-column matrix of linear coefficients of the weight-1 components.
fn weight_one_rows<F: Field>(curve: &ParamCurve<F>) -> Vec<Vec<F>> {
    curve
        .weights
        .iter()
        .zip(&curve.components)
        .filter(|(w, _)| **w == 1)
        .map(|(_, c)| vec![c.coeff(&[1, 0]), c.coeff(&[0, 1])])
        .collect()
}

fn rank2<F: Field>(rows: &[Vec<F>]) -> bool {
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let det = rows[i][0].clone() * rows[j][1].clone()
                - rows[i][1].clone() * rows[j][0].clone();
            if !det.is_zero() {
                return true;
            }
        }
    }
    false
}

/// Whether two parametrized curves in the same ambient have disjoint images.
///
/// The decision runs on the weight-1 coordinates, which both curves must
/// embed as honest lines (their linear parametrizations have rank 2; other
/// cases are reported as undecided).  Writing `L1`, `L2` for the linear
/// maps, the joint null space of `[L1 | -L2]` splits three ways:
///
/// * trivial: the weight-1 images are skew lines, so the curves are
///   disjoint no matter what the higher-weight components do;
/// * one-dimensional: the lines cross in one point, pinning one parameter
///   value on each side; the curves meet iff every higher-weight component
///   agrees there (the normalization `L1 p = L2 q` fixes the weighted
///   scaling);
/// * two-dimensional: the same line, so the parameters are identified by a
///   2x2 change of coordinates `M` with `L2 = L1 M`, and the curves meet
///   iff the residual forms `c2_i - c1_i(M .)` share a root on the
///   parameter line.
pub fn curves_disjoint<F: Field>(
    c1: &ParamCurve<F>,
    c2: &ParamCurve<F>,
) -> Result<bool, DelPezzoError> {
    if c1.weights != c2.weights {
        return Err(DelPezzoError::WeightMismatch);
    }
    let l1 = weight_one_rows(c1);
    let l2 = weight_one_rows(c2);
    if !rank2(&l1) || !rank2(&l2) {
        return Err(DelPezzoError::DisjointnessUndecided(
            "weight-1 components do not trace a line".into(),
        ));
    }

    let stacked: Vec<Vec<F>> = l1
        .iter()
        .zip(&l2)
        .map(|(r1, r2)| {
            vec![
                r1[0].clone(),
                r1[1].clone(),
                F::zero() - r2[0].clone(),
                F::zero() - r2[1].clone(),
            ]
        })
        .collect();
    let null = null_space(stacked, 4);

    match null.len() {
        // Skew weight-1 lines: nothing to check.
        0 => Ok(true),
        // One crossing: evaluate every coordinate at the pinned parameters.
        1 => {
            let v = &null[0];
            let p = [v[0].clone(), v[1].clone()];
            let q = [v[2].clone(), v[3].clone()];
            for (c1_i, c2_i) in c1.components.iter().zip(&c2.components) {
                if c1_i.eval(&p)? != c2_i.eval(&q)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        // Same weight-1 line: compare along a common parametrization.
        _ => {
            let (i1, i2) = independent_pair(&l1);
            let sub1 = Matrix::from_rows(vec![l1[i1].clone(), l1[i2].clone()])?;
            let sub2 = Matrix::from_rows(vec![l2[i1].clone(), l2[i2].clone()])?;
            let m = sub1.inverse().expect("rank-2 pair").mul(&sub2);
            let mut residuals = Vec::new();
            for ((c1_i, c2_i), w) in c1.components.iter().zip(&c2.components).zip(&c1.weights) {
                let r = c2_i.sub(&c1_i.compose_linear(&m)?);
                if *w == 1 {
                    // Forced by the choice of M; a failure here means the
                    // weight-1 data was not actually a common line.
                    assert!(r.is_zero(), "reparametrization must match weight-1 parts");
                } else if !r.is_zero() {
                    residuals.push(r);
                }
            }
            if residuals.is_empty() {
                return Ok(false); // identical curves
            }
            let refs: Vec<&MultiPoly<F>> = residuals.iter().collect();
            Ok(!forms_share_a_root(&refs))
        }
    }
}

fn independent_pair<F: Field>(rows: &[Vec<F>]) -> (usize, usize) {
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let det = rows[i][0].clone() * rows[j][1].clone()
                - rows[i][1].clone() * rows[j][0].clone();
            if !det.is_zero() {
                return (i, j);
            }
        }
    }
    unreachable!("caller checked rank 2")
}

/// `Some(lambda)` iff `F(M x) = lambda * F(x)` as polynomials, for the
/// stored matrix representative of the map.
pub fn form_invariant_under<F: Field>(
    form: &MultiPoly<F>,
    map: &ProjMap<F>,
) -> Result<Option<F>, DelPezzoError> {
    if form.table().weights() != map.weights() {
        return Err(DelPezzoError::WeightMismatch);
    }
    let composed = form.compose_linear(map.matrix())?;
    Ok(form.ratio_to(&composed))
}

/// The group generated by weighted projective maps preserving the surface
/// (each generator must satisfy `form o gen = lambda * form` for some
/// scalar; anything else is rejected).
pub fn weighted_aut_group<F: Field>(
    surface: &WeightedHypersurface<F>,
    generators: &[ProjMap<F>],
) -> Result<FiniteGroup<ProjMap<F>>, DelPezzoError> {
    for (index, gen) in generators.iter().enumerate() {
        if gen.weights() != surface.weights() {
            return Err(DelPezzoError::WeightMismatch);
        }
        if form_invariant_under(surface.form(), gen)?.is_none() {
            return Err(DelPezzoError::GeneratorBreaksSurface { index });
        }
    }
    Ok(FiniteGroup::closure(generators, 2000)?)
}

/// Whether a 2x2 matrix fixes both binary forms exactly (scale factor 1,
/// not merely up to a multiple).
pub fn dp1_stabilizer_check<F: Field>(
    a: &Matrix<F>,
    f4: &MultiPoly<F>,
    f6: &MultiPoly<F>,
) -> Result<bool, DelPezzoError> {
    if a.inverse().is_none() {
        return Err(DelPezzoError::SingularMatrix);
    }
    Ok(f4.compose_linear(a)? == *f4 && f6.compose_linear(a)? == *f6)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, Rational, VarTable};

    fn params() -> VarTable {
        VarTable::new(&["a", "b"])
    }

    /// Build a binary form from (coeff, exp_a, exp_b) triples.
    fn form(terms: &[(i64, u32, u32)]) -> MultiPoly<Rational> {
        let t = params();
        terms.iter().fold(MultiPoly::zero(&t), |acc, &(c, ea, eb)| {
            acc.add(&MultiPoly::monomial(&t, &[("a", ea), ("b", eb)], rat(c)).unwrap())
        })
    }

    #[test]
    fn hypersurface_requires_weighted_homogeneity() {
        let t = VarTable::weighted(&[("w", 2), ("x", 1), ("y", 1)]);
        let w: MultiPoly<Rational> = MultiPoly::var_named(&t, "w").unwrap();
        let x = MultiPoly::var_named(&t, "x").unwrap();
        assert!(WeightedHypersurface::new(w.clone().sub(&x.pow(2))).is_ok());
        assert!(matches!(
            WeightedHypersurface::new(w.sub(&x)),
            Err(DelPezzoError::NotWeightedHomogeneous)
        ));
    }

    #[test]
    fn curve_validation() {
        // Degree must match the coordinate weight.
        let bad = ParamCurve::new(
            vec![2, 1, 1],
            vec![form(&[(1, 1, 0)]), form(&[(1, 1, 0)]), form(&[(1, 0, 1)])],
        );
        assert!(matches!(bad, Err(DelPezzoError::IllFormedCurve(_))));

        // Components sharing the root a = 0 leave the image undefined there.
        let based = ParamCurve::new(vec![1, 1], vec![form(&[(1, 1, 0)]), form(&[(2, 1, 0)])]);
        assert!(matches!(based, Err(DelPezzoError::IllFormedCurve(_))));

        let good = ParamCurve::new(
            vec![2, 1, 1],
            vec![form(&[(1, 2, 0)]), form(&[(1, 1, 0)]), form(&[(1, 0, 1)])],
        );
        assert!(good.is_ok());
    }

    #[test]
    fn containment_by_substitution() {
        // In P(2,1,1) the surface w = xy contains the curve [ab : a : b].
        let t = VarTable::weighted(&[("w", 2), ("x", 1), ("y", 1)]);
        let w: MultiPoly<Rational> = MultiPoly::var_named(&t, "w").unwrap();
        let x = MultiPoly::var_named(&t, "x").unwrap();
        let y = MultiPoly::var_named(&t, "y").unwrap();
        let s = WeightedHypersurface::new(x.mul(&y).sub(&w)).unwrap();

        let on = ParamCurve::new(
            vec![2, 1, 1],
            vec![form(&[(1, 1, 1)]), form(&[(1, 1, 0)]), form(&[(1, 0, 1)])],
        )
        .unwrap();
        assert!(surface_contains_curve(&s, &on).unwrap());

        let off = ParamCurve::new(
            vec![2, 1, 1],
            vec![form(&[(1, 1, 1), (1, 2, 0)]), form(&[(1, 1, 0)]), form(&[(1, 0, 1)])],
        )
        .unwrap();
        assert!(!surface_contains_curve(&s, &off).unwrap());

        let wrong_ambient = ParamCurve::new(
            vec![1, 1],
            vec![form(&[(1, 1, 0)]), form(&[(1, 0, 1)])],
        )
        .unwrap();
        assert!(matches!(
            surface_contains_curve(&s, &wrong_ambient),
            Err(DelPezzoError::WeightMismatch)
        ));
    }

    fn line(v0: [i64; 4], v1: [i64; 4]) -> ParamCurve<Rational> {
        let comps = (0..4)
            .map(|i| form(&[(v0[i], 1, 0), (v1[i], 0, 1)]))
            .collect();
        ParamCurve::new(vec![1, 1, 1, 1], comps).unwrap()
    }

    #[test]
    fn lines_in_space() {
        // Two lines through disjoint coordinate planes are skew.
        let l1 = line([1, 0, 0, 0], [0, 1, 0, 0]);
        let l2 = line([0, 0, 1, 0], [0, 0, 0, 1]);
        assert!(curves_disjoint(&l1, &l2).unwrap());

        // Two lines through a common point are not.
        let l3 = line([1, 0, 0, 0], [0, 0, 1, 1]);
        assert!(!curves_disjoint(&l1, &l3).unwrap());

        // A line and itself.
        assert!(!curves_disjoint(&l1, &l1).unwrap());

        // Same line, different parametrization.
        let l1_reparam = line([1, 1, 0, 0], [1, -1, 0, 0]);
        assert!(!curves_disjoint(&l1, &l1_reparam).unwrap());
    }

    #[test]
    fn weighted_curves_meeting_at_one_crossing() {
        // In P(2,1,1): same weight-1 line, higher component differing by b^2
        // (meet where b = 0) or pinched apart everywhere.
        let c1 = ParamCurve::new(
            vec![2, 1, 1],
            vec![form(&[(1, 2, 0)]), form(&[(1, 1, 0)]), form(&[(1, 0, 1)])],
        )
        .unwrap();
        let c2 = ParamCurve::new(
            vec![2, 1, 1],
            vec![form(&[(1, 2, 0), (1, 0, 2)]), form(&[(1, 1, 0)]), form(&[(1, 0, 1)])],
        )
        .unwrap();
        assert!(!curves_disjoint(&c1, &c2).unwrap());

        // Two higher-weight coordinates with residuals a^2 and b^2: no
        // common parameter, so the curves are disjoint.
        let d1 = ParamCurve::new(
            vec![2, 2, 1, 1],
            vec![
                form(&[(1, 2, 0)]),
                form(&[(1, 0, 2)]),
                form(&[(1, 1, 0)]),
                form(&[(1, 0, 1)]),
            ],
        )
        .unwrap();
        let d2 = ParamCurve::new(
            vec![2, 2, 1, 1],
            vec![
                form(&[(1, 2, 0), (1, 0, 2)]),
                form(&[(1, 0, 2), (1, 2, 0)]),
                form(&[(1, 1, 0)]),
                form(&[(1, 0, 1)]),
            ],
        )
        .unwrap();
        assert!(curves_disjoint(&d1, &d2).unwrap());
    }

    #[test]
    fn invariance_scalars() {
        let t = VarTable::new(&["x", "y"]);
        let x = MultiPoly::var_named(&t, "x").unwrap();
        let y = MultiPoly::var_named(&t, "y").unwrap();
        let q = x.pow(2).add(&y.pow(2));

        let rot = ProjMap::rational(&[&[0, -1], &[1, 0]]);
        assert_eq!(form_invariant_under(&q, &rot).unwrap(), Some(rat(1)));

        let double = ProjMap::rational(&[&[2, 0], &[0, 2]]);
        assert_eq!(form_invariant_under(&q, &double).unwrap(), Some(rat(4)));

        let skew = x.pow(2).add(&x.mul(&y));
        let swap = ProjMap::rational(&[&[0, 1], &[1, 0]]);
        assert_eq!(form_invariant_under(&skew, &swap).unwrap(), None);
    }

    #[test]
    fn aut_group_rejects_bad_generators() {
        let t = VarTable::new(&["x", "y"]);
        let x = MultiPoly::var_named(&t, "x").unwrap();
        let y = MultiPoly::var_named(&t, "y").unwrap();
        let s = WeightedHypersurface::new(x.pow(2).add(&y.pow(2))).unwrap();

        let ok = weighted_aut_group(&s, &[ProjMap::identity(2)]).unwrap();
        assert_eq!(ok.order(), 1);

        let shear = ProjMap::rational(&[&[1, 1], &[0, 1]]);
        assert!(matches!(
            weighted_aut_group(&s, &[ProjMap::identity(2), shear]),
            Err(DelPezzoError::GeneratorBreaksSurface { index: 1 })
        ));
    }

    #[test]
    fn exact_stabilizer_for_binary_forms() {
        let f4 = form(&[(1, 4, 0), (1, 0, 4)]);
        let f6 = form(&[(1, 6, 0), (1, 0, 6)]);
        let swap: Matrix<Rational> = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]).unwrap();
        assert!(dp1_stabilizer_check(&swap, &f4, &f6).unwrap());

        // Scaling preserves the forms only up to a multiple, which the
        // check must reject.
        let stretch: Matrix<Rational> = Matrix::from_int_rows(&[&[2, 0], &[0, 2]]).unwrap();
        assert!(!dp1_stabilizer_check(&stretch, &f4, &f6).unwrap());

        let singular: Matrix<Rational> = Matrix::from_int_rows(&[&[1, 1], &[1, 1]]).unwrap();
        assert_eq!(
            dp1_stabilizer_check(&singular, &f4, &f6),
            Err(DelPezzoError::SingularMatrix)
        );
    }
}
