use crate::exactalg::{Field, Matrix, Rational};
use crate::groupkit::{FiniteGroup, Perm};
use crate::projlin::ProjMap;

use super::DelPezzoError;

/// A list of pairwise distinct points of the projective plane over `F`,
/// each stored as a nonzero coordinate 3-vector (any representative).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfig<F: Field> {
    points: Vec<Vec<F>>,
}

/// Projective equality of coordinate vectors: all 2x2 cross terms vanish.
fn same_point<F: Field>(p: &[F], q: &[F]) -> bool {
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i].clone() * q[j].clone() != p[j].clone() * q[i].clone() {
                return false;
            }
        }
    }
    true
}

impl<F: Field> PointConfig<F> {
    pub fn new(points: Vec<Vec<F>>) -> Result<PointConfig<F>, DelPezzoError> {
        for p in &points {
            if p.len() != 3 || p.iter().all(|c| c.is_zero()) {
                return Err(DelPezzoError::BadPoint);
            }
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if same_point(&points[i], &points[j]) {
                    return Err(DelPezzoError::CoincidentPoints);
                }
            }
        }
        Ok(PointConfig { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> &[F] {
        &self.points[i]
    }

    pub fn points(&self) -> &[Vec<F>] {
        &self.points
    }
}

impl PointConfig<Rational> {
    pub fn from_ints(points: &[[i64; 3]]) -> Result<PointConfig<Rational>, DelPezzoError> {
        let points = points
            .iter()
            .map(|p| p.iter().map(|&c| Rational::from_int(c)).collect())
            .collect();
        PointConfig::new(points)
    }
}

/// Whether three pairwise distinct points lie on a line (3x3 determinant).
pub fn collinear<F: Field>(p: &[F], q: &[F], r: &[F]) -> Result<bool, DelPezzoError> {
    if same_point(p, q) || same_point(p, r) || same_point(q, r) {
        return Err(DelPezzoError::CoincidentPoints);
    }
    let m = Matrix::from_rows(vec![p.to_vec(), q.to_vec(), r.to_vec()])?;
    Ok(m.det().is_zero())
}

/// Whether six distinct points lie on a (possibly degenerate) conic: the
/// 6x6 determinant of their Veronese images (x^2, xy, y^2, xz, yz, z^2).
pub fn six_on_conic<F: Field>(points: &[Vec<F>]) -> Result<bool, DelPezzoError> {
    if points.len() != 6 {
        return Err(DelPezzoError::WrongPointCount { want: 6, got: points.len() });
    }
    let rows = points
        .iter()
        .map(|p| {
            let (x, y, z) = (p[0].clone(), p[1].clone(), p[2].clone());
            vec![
                x.clone() * x.clone(),
                x.clone() * y.clone(),
                y.clone() * y.clone(),
                x * z.clone(),
                y * z.clone(),
                z.clone() * z,
            ]
        })
        .collect();
    Ok(Matrix::from_rows(rows)?.det().is_zero())
}

/// General position: no three of the points collinear and, when there are
/// at least six, no six on a conic.
pub fn general_position<F: Field>(config: &PointConfig<F>) -> Result<bool, DelPezzoError> {
    let n = config.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if collinear(config.point(i), config.point(j), config.point(k))? {
                    return Ok(false);
                }
            }
        }
    }
    if n >= 6 {
        use itertools::Itertools;
        for combo in (0..n).combinations(6) {
            let six: Vec<Vec<F>> = combo.iter().map(|&i| config.point(i).to_vec()).collect();
            if six_on_conic(&six)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The matrix sending the standard frame e1, e2, e3, e1+e2+e3 to the given
/// quadruple: columns are the first three points scaled so they sum to the
/// fourth.  Fails when any three of the four are collinear.
fn frame_matrix<F: Field>(quad: &[Vec<F>]) -> Result<Matrix<F>, DelPezzoError> {
    let m = Matrix::from_cols(quad[..3].to_vec())?;
    let coeffs = m.solve(&quad[3]).ok_or(DelPezzoError::DegenerateConfiguration)?;
    if coeffs.iter().any(|c| c.is_zero()) {
        // The fourth point lies on a line through two of the others.
        return Err(DelPezzoError::DegenerateConfiguration);
    }
    let cols = quad[..3]
        .iter()
        .zip(&coeffs)
        .map(|(p, c)| p.iter().map(|x| x.clone() * c.clone()).collect())
        .collect();
    Ok(Matrix::from_cols(cols)?)
}

/// The unique projectivity carrying one frame (four points, no three
/// collinear) onto another, point by point.
pub fn unique_projectivity<F: Field>(
    src: &[Vec<F>],
    dst: &[Vec<F>],
) -> Result<ProjMap<F>, DelPezzoError> {
    if src.len() != 4 || dst.len() != 4 {
        let got = if src.len() != 4 { src.len() } else { dst.len() };
        return Err(DelPezzoError::WrongPointCount { want: 4, got });
    }
    let s = frame_matrix(src)?;
    let d = frame_matrix(dst)?;
    let inv = s.inverse().ok_or(DelPezzoError::DegenerateConfiguration)?;
    Ok(ProjMap::new(d.mul(&inv))?)
}

/// All permutations of a five-point configuration in general position that
/// are realized by a projectivity of the plane: the unique map determined by
/// the first four images must also send the fifth point correctly.
pub fn realizable_point_permutations<F: Field>(
    config: &PointConfig<F>,
) -> Result<FiniteGroup<Perm>, DelPezzoError> {
    if config.len() != 5 {
        return Err(DelPezzoError::WrongPointCount { want: 5, got: config.len() });
    }
    if !general_position(config)? {
        return Err(DelPezzoError::DegenerateConfiguration);
    }
    let mut realizable = Vec::new();
    for sigma in Perm::all(5) {
        let src: Vec<Vec<F>> = (0..4).map(|i| config.point(i).to_vec()).collect();
        let dst: Vec<Vec<F>> =
            (0..4).map(|i| config.point(sigma.image(i)).to_vec()).collect();
        let map = unique_projectivity(&src, &dst)?;
        let image = map.matrix().mul_vec(config.point(4));
        if same_point(&image, config.point(sigma.image(4))) {
            realizable.push(sigma);
        }
    }
    // The realizable permutations are the image of a stabilizer subgroup of
    // PGL_3, so the set is closed; from_closed_set re-checks that.
    Ok(FiniteGroup::from_closed_set(realizable)?)
}
