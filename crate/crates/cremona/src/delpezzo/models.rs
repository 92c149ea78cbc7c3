//! The named surface models the report generator runs its checks on: the
//! cubic in P^4 with its pair of rational lines, the Fermat cubic over
//! Q(zeta_3), the degree-2 double cover in P(2,1,1,1), the degree-1 surface
//! in P(3,1,1,2) with its two-parameter family of sextic tails, and the
//! blown-up sixth-degree surface whose symmetries live in an abstract
//! bit-vector extension.

use crate::exactalg::{Cyclotomic, Field, Matrix, MultiPoly, Rational, VarTable};
use crate::groupkit::{FiniteGroup, PermVectorElement};
use crate::projlin::ProjMap;

use super::points::{realizable_point_permutations, PointConfig};
use super::surfaces::{form_invariant_under, weighted_aut_group, ParamCurve, WeightedHypersurface};
use super::DelPezzoError;

/// Coordinate permutation as a projective map: coordinate `i` of the pulled
/// back form reads from coordinate `images[i]`.
fn coordinate_permutation<F: Field>(weights: &[u32], images: &[usize]) -> ProjMap<F> {
    let n = images.len();
    let mut rows = vec![vec![F::zero(); n]; n];
    for (i, &j) in images.iter().enumerate() {
        rows[i][j] = F::one();
    }
    let m = Matrix::from_rows(rows).expect("permutation matrix is square");
    ProjMap::new_weighted(m, weights).expect("permutation matrix is invertible")
}

fn diagonal_map<F: Field>(weights: &[u32], entries: Vec<F>) -> ProjMap<F> {
    let n = entries.len();
    let mut rows = vec![vec![F::zero(); n]; n];
    for (i, e) in entries.into_iter().enumerate() {
        rows[i][i] = e;
    }
    let m = Matrix::from_rows(rows).expect("diagonal matrix is square");
    ProjMap::new_weighted(m, weights).expect("diagonal entries are nonzero")
}

/// The cubic surface cut out of P^4 by the two symmetric equations
/// `sum x_i = 0` and `sum x_i^3 = 0`, together with the two disjoint
/// rational lines it contains and the coordinate permutations acting on it.
#[derive(Debug, Clone)]
pub struct ClebschModel {
    pub hyperplane: WeightedHypersurface<Rational>,
    pub cubic: WeightedHypersurface<Rational>,
    pub curves: [ParamCurve<Rational>; 2],
    pub generators: Vec<ProjMap<Rational>>,
}

impl ClebschModel {
    /// Closure of the coordinate permutations, each checked to preserve
    /// both defining equations.
    pub fn symmetry_group(&self) -> Result<FiniteGroup<ProjMap<Rational>>, DelPezzoError> {
        for (index, g) in self.generators.iter().enumerate() {
            if form_invariant_under(self.hyperplane.form(), g)?.is_none()
                || form_invariant_under(self.cubic.form(), g)?.is_none()
            {
                return Err(DelPezzoError::GeneratorBreaksSurface { index });
            }
        }
        Ok(FiniteGroup::closure(&self.generators, 2000)?)
    }
}

pub fn clebsch_cubic() -> ClebschModel {
    let t = VarTable::new(&["x0", "x1", "x2", "x3", "x4"]);
    let mut hyperplane = MultiPoly::zero(&t);
    let mut cubic = MultiPoly::zero(&t);
    for i in 0..5 {
        let x: MultiPoly<Rational> = MultiPoly::var(&t, i);
        hyperplane = hyperplane.add(&x);
        cubic = cubic.add(&x.pow(3));
    }

    let p = VarTable::new(&["a", "b"]);
    let a: MultiPoly<Rational> = MultiPoly::var(&p, 0);
    let b = MultiPoly::var(&p, 1);
    let zero = MultiPoly::zero(&p);
    let weights = vec![1; 5];
    let e1 = ParamCurve::new(
        weights.clone(),
        vec![zero.clone(), a.clone(), a.neg(), b.clone(), b.neg()],
    )
    .expect("line parametrization is well formed");
    let e2 = ParamCurve::new(weights, vec![a.clone(), zero, b.clone(), a.neg(), b.neg()])
        .expect("line parametrization is well formed");

    let w5 = [1u32; 5];
    ClebschModel {
        hyperplane: WeightedHypersurface::new(hyperplane).expect("linear form"),
        cubic: WeightedHypersurface::new(cubic).expect("cubic form"),
        curves: [e1, e2],
        generators: vec![
            coordinate_permutation(&w5, &[1, 0, 2, 3, 4]),
            coordinate_permutation(&w5, &[1, 2, 3, 4, 0]),
        ],
    }
}

/// The cubic surface `t0^3 + t1^3 + t2^3 + t3^3 = 0` over Q(zeta_3), with
/// the third-root-of-unity coordinate scalings and the coordinate
/// permutations as generators.
#[derive(Debug, Clone)]
pub struct FermatModel {
    pub cubic: WeightedHypersurface<Cyclotomic>,
    pub generators: Vec<ProjMap<Cyclotomic>>,
}

impl FermatModel {
    pub fn symmetry_group(&self) -> Result<FiniteGroup<ProjMap<Cyclotomic>>, DelPezzoError> {
        weighted_aut_group(&self.cubic, &self.generators)
    }
}

pub fn fermat_cubic() -> FermatModel {
    let t = VarTable::new(&["t0", "t1", "t2", "t3"]);
    let mut cubic = MultiPoly::zero(&t);
    for i in 0..4 {
        cubic = cubic.add(&MultiPoly::<Cyclotomic>::var(&t, i).pow(3));
    }

    let w4 = [1u32; 4];
    let one = || Cyclotomic::one();
    let zeta = || Cyclotomic::zeta(3);
    let mut generators = Vec::new();
    for i in 0..3 {
        let mut entries = vec![one(), one(), one(), one()];
        entries[i] = zeta();
        generators.push(diagonal_map(&w4, entries));
    }
    generators.push(coordinate_permutation(&w4, &[1, 0, 2, 3]));
    generators.push(coordinate_permutation(&w4, &[1, 2, 3, 0]));

    FermatModel {
        cubic: WeightedHypersurface::new(cubic).expect("cubic form"),
        generators,
    }
}

/// The degree-2 surface `3w^2 + x1^4 + x2^4 + x3^4 - 5(x1^2x2^2 + x1^2x3^2
/// + x2^2x3^2) = 0` in P(2,1,1,1), its three disjoint rational curves, and
/// the sign changes and coordinate permutations generating its symmetries.
/// The first generator is the deck swap `w -> -w` of the double cover.
#[derive(Debug, Clone)]
pub struct Dp2Model {
    pub surface: WeightedHypersurface<Rational>,
    pub curves: [ParamCurve<Rational>; 3],
    pub generators: Vec<ProjMap<Rational>>,
}

impl Dp2Model {
    pub fn deck_swap(&self) -> &ProjMap<Rational> {
        &self.generators[0]
    }

    pub fn symmetry_group(&self) -> Result<FiniteGroup<ProjMap<Rational>>, DelPezzoError> {
        weighted_aut_group(&self.surface, &self.generators)
    }
}

pub fn dp2_double_cover() -> Dp2Model {
    let t = VarTable::weighted(&[("w", 2), ("x1", 1), ("x2", 1), ("x3", 1)]);
    let w: MultiPoly<Rational> = MultiPoly::var(&t, 0);
    let x1 = MultiPoly::var(&t, 1);
    let x2 = MultiPoly::var(&t, 2);
    let x3 = MultiPoly::var(&t, 3);
    let five = MultiPoly::constant(&t, Rational::from_int(5));
    let form = w
        .pow(2)
        .scale(&Rational::from_int(3))
        .add(&x1.pow(4))
        .add(&x2.pow(4))
        .add(&x3.pow(4))
        .sub(
            &five.mul(
                &x1.pow(2)
                    .mul(&x2.pow(2))
                    .add(&x1.pow(2).mul(&x3.pow(2)))
                    .add(&x2.pow(2).mul(&x3.pow(2))),
            ),
        );

    let p = VarTable::new(&["a", "b"]);
    let a: MultiPoly<Rational> = MultiPoly::var(&p, 0);
    let b = MultiPoly::var(&p, 1);
    // a^2 + ab + b^2 shows up in two of the three curves.
    let q = a.pow(2).add(&a.mul(&b)).add(&b.pow(2));
    let weights = vec![2, 1, 1, 1];
    let e1 = ParamCurve::new(
        weights.clone(),
        vec![q.clone(), a.clone(), b.clone(), a.add(&b).neg()],
    )
    .expect("curve parametrization is well formed");
    let e2 = ParamCurve::new(
        weights.clone(),
        vec![q.neg(), a.clone(), b.clone(), a.add(&b)],
    )
    .expect("curve parametrization is well formed");
    let e3_w = a
        .pow(2)
        .add(&a.mul(&b).scale(&Rational::from_int(2)))
        .sub(&b.pow(2));
    let e3 = ParamCurve::new(
        weights,
        vec![
            e3_w,
            a.clone(),
            b.clone(),
            a.scale(&Rational::from_int(2)).sub(&b),
        ],
    )
    .expect("curve parametrization is well formed");

    let wts = [2u32, 1, 1, 1];
    let one = || Rational::from_int(1);
    let neg = || Rational::from_int(-1);
    Dp2Model {
        surface: WeightedHypersurface::new(form).expect("weighted quartic form"),
        curves: [e1, e2, e3],
        generators: vec![
            diagonal_map(&wts, vec![neg(), one(), one(), one()]),
            diagonal_map(&wts, vec![one(), neg(), one(), one()]),
            diagonal_map(&wts, vec![one(), one(), neg(), one()]),
            coordinate_permutation(&wts, &[0, 2, 1, 3]),
            coordinate_permutation(&wts, &[0, 2, 3, 1]),
        ],
    }
}

/// Which terms of the printed sextic tail the scalar parameter multiplies.
/// The sum `lambda*(x^2y^4 + 2x^3y^3 + x^4y^2) + (3x^5y + 3xy^5 - 5x^3y^3 +
/// x^6 + y^6)` can also be read with the parenthesis closing after the
/// `-5x^3y^3` term; the two readings give different polynomials whenever
/// `lambda != 1`, and the model can be built either way.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SexticGrouping {
    /// `lambda` multiplies the three terms `x^2y^4 + 2x^3y^3 + x^4y^2`.
    ThreeTermScale,
    /// `lambda` multiplies those plus `3x^5y + 3xy^5 - 5x^3y^3`, leaving
    /// only `x^6 + y^6` unscaled.
    SixTermScale,
}

/// The degree-1 surface `w^2 - z^3 - F4(x,y)z - F6(x,y) = 0` in P(3,1,1,2)
/// with `F4 = mu*(x^2 + xy + y^2)^2` and the sextic `F6` selected by a
/// [`SexticGrouping`], its two generating symmetries, and the four printed
/// curve parametrizations (recorded as printed; the containment and
/// disjointness checks are the point, not foregone conclusions).
#[derive(Debug, Clone)]
pub struct Dp1Model {
    pub surface: WeightedHypersurface<Rational>,
    /// Quartic in (x, y) alone, for the plane-stabilizer check.
    pub f4: MultiPoly<Rational>,
    /// Sextic in (x, y) alone.
    pub f6: MultiPoly<Rational>,
    pub alpha: ProjMap<Rational>,
    pub beta: ProjMap<Rational>,
    pub curves: [ParamCurve<Rational>; 4],
}

impl Dp1Model {
    /// The 2x2 linear part of `alpha` on the plane coordinates (x, y).
    pub fn alpha_plane_part(&self) -> Matrix<Rational> {
        Matrix::from_int_rows(&[&[0, -1], &[1, 1]]).expect("fixed 2x2 matrix")
    }

    /// The 2x2 linear part of `beta` on the plane coordinates (x, y).
    pub fn beta_plane_part(&self) -> Matrix<Rational> {
        Matrix::from_int_rows(&[&[-1, -1], &[0, 1]]).expect("fixed 2x2 matrix")
    }

    pub fn symmetry_group(&self) -> Result<FiniteGroup<ProjMap<Rational>>, DelPezzoError> {
        weighted_aut_group(&self.surface, &[self.alpha.clone(), self.beta.clone()])
    }
}

/// Binary form in (x, y) from (coefficient, x-exponent, y-exponent) triples.
fn binary(table: &VarTable, terms: &[(Rational, u32, u32)]) -> MultiPoly<Rational> {
    terms.iter().fold(MultiPoly::zero(table), |acc, (c, ex, ey)| {
        acc.add(
            &MultiPoly::monomial(table, &[("x", *ex), ("y", *ey)], c.clone())
                .expect("x and y are table variables"),
        )
    })
}

pub fn dp1_model(grouping: SexticGrouping, lambda: Rational, mu: Rational) -> Dp1Model {
    let xy = VarTable::new(&["x", "y"]);
    let x: MultiPoly<Rational> = MultiPoly::var(&xy, 0);
    let y = MultiPoly::var(&xy, 1);
    let f4 = x
        .pow(2)
        .add(&x.mul(&y))
        .add(&y.pow(2))
        .pow(2)
        .scale(&mu);

    let one = Rational::from_int(1);
    let scaled_head = binary(
        &xy,
        &[
            (one.clone(), 2, 4),
            (Rational::from_int(2), 3, 3),
            (one.clone(), 4, 2),
        ],
    );
    let middle = binary(
        &xy,
        &[
            (Rational::from_int(3), 5, 1),
            (Rational::from_int(3), 1, 5),
            (Rational::from_int(-5), 3, 3),
        ],
    );
    let tail = binary(&xy, &[(one.clone(), 6, 0), (one, 0, 6)]);
    let f6 = match grouping {
        SexticGrouping::ThreeTermScale => scaled_head.scale(&lambda).add(&middle).add(&tail),
        SexticGrouping::SixTermScale => scaled_head.add(&middle).scale(&lambda).add(&tail),
    };

    // Assemble w^2 - z^3 - F4*z - F6 in the weighted ambient.
    let t = VarTable::weighted(&[("w", 3), ("x", 1), ("y", 1), ("z", 2)]);
    let embed = |f: &MultiPoly<Rational>| {
        f.terms().fold(MultiPoly::zero(&t), |acc, (exps, c)| {
            acc.add(
                &MultiPoly::monomial(&t, &[("x", exps[0]), ("y", exps[1])], c.clone())
                    .expect("x and y are ambient variables"),
            )
        })
    };
    let w: MultiPoly<Rational> = MultiPoly::var(&t, 0);
    let z = MultiPoly::var(&t, 3);
    let form = w
        .pow(2)
        .sub(&z.pow(3))
        .sub(&embed(&f4).mul(&z))
        .sub(&embed(&f6));

    let wts = [3u32, 1, 1, 2];
    let alpha = ProjMap::new_weighted(
        Matrix::from_int_rows(&[
            &[1, 0, 0, 0],
            &[0, 0, -1, 0],
            &[0, 1, 1, 0],
            &[0, 0, 0, 1],
        ])
        .expect("fixed 4x4 matrix"),
        &wts,
    )
    .expect("alpha is invertible");
    let beta = ProjMap::new_weighted(
        Matrix::from_int_rows(&[
            &[1, 0, 0, 0],
            &[0, -1, -1, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
        ])
        .expect("fixed 4x4 matrix"),
        &wts,
    )
    .expect("beta is invertible");

    // Curve parametrizations with x = a, y = b, as printed: the w-components
    // of the first and third (and of the second and fourth) coincide.
    let p = VarTable::new(&["a", "b"]);
    let a: MultiPoly<Rational> = MultiPoly::var(&p, 0);
    let b = MultiPoly::var(&p, 1);
    let wq = a.pow(2).mul(&b).add(&a.mul(&b.pow(2)));
    let zq = a.pow(2).add(&a.mul(&b)).add(&b.pow(2)).neg();
    let curve = |wc: MultiPoly<Rational>| {
        ParamCurve::new(vec![3, 1, 1, 2], vec![wc, a.clone(), b.clone(), zq.clone()])
            .expect("curve parametrization is well formed")
    };
    let curves = [
        curve(wq.clone()),
        curve(wq.neg()),
        curve(wq.clone()),
        curve(wq.neg()),
    ];

    Dp1Model {
        surface: WeightedHypersurface::new(form).expect("weighted sextic form"),
        f4,
        f6,
        alpha,
        beta,
        curves,
    }
}

/// The five-point plane configuration whose blow-up is the twice-blown-up
/// sixth-degree surface: two conjugate points with third-root-of-unity
/// coordinates and the three coordinate points.
pub fn dp4_point_config() -> PointConfig<Cyclotomic> {
    let one = Cyclotomic::one();
    let zero = Cyclotomic::zero();
    let omega = Cyclotomic::zeta(3);
    let omega2 = Cyclotomic::zeta_pow(3, 2);
    PointConfig::new(vec![
        vec![one.clone(), omega.clone(), omega2.clone()],
        vec![one.clone(), omega2, omega],
        vec![one.clone(), zero.clone(), zero.clone()],
        vec![zero.clone(), one.clone(), zero.clone()],
        vec![zero.clone(), zero, one],
    ])
    .expect("the five printed points are distinct")
}

/// The symmetry group of the blown-up surface in abstract form — the
/// even-weight bit vectors on the five exceptional classes extended by the
/// point permutations the plane realizes — together with the element the
/// coordinate conjugation induces, which is central.
pub fn dp4_blowup_group() -> (FiniteGroup<PermVectorElement>, PermVectorElement) {
    let perms = realizable_point_permutations(&dp4_point_config())
        .expect("the configuration is in general position");
    let mut gens: Vec<PermVectorElement> = [0b00011u32, 0b00110, 0b01100, 0b11000]
        .iter()
        .map(|&mask| PermVectorElement::pure_vector(mask, 5))
        .collect();
    gens.extend(
        perms
            .elements()
            .iter()
            .map(|s| PermVectorElement::pure_perm(s.clone())),
    );
    let group = FiniteGroup::closure(&gens, 200).expect("16 vectors times 6 permutations");
    let conjugation = PermVectorElement::pure_vector(0b00011, 5);
    (group, conjugation)
}
