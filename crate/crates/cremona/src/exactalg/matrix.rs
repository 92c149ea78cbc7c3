use std::fmt;
use std::ops::Index;

use super::{ExactError, Field};

/// Dense matrix over an exact field. Row-major; all rows the same length.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Matrix<F>, ExactError> {
        let r = rows.len();
        if r == 0 {
            return Err(ExactError::DimensionMismatch { want: 1, got: 0 });
        }
        let c = rows[0].len();
        if c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(ExactError::DimensionMismatch {
                want: c,
                got: rows.iter().map(|row| row.len()).find(|&l| l != c).unwrap_or(0),
            });
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Matrix<F>, ExactError> {
        Matrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| F::from_int(v)).collect())
                .collect(),
        )
    }

    pub fn from_cols(cols: Vec<Vec<F>>) -> Result<Matrix<F>, ExactError> {
        Ok(Matrix::from_rows(cols)?.transpose())
    }

    pub fn identity(n: usize) -> Matrix<F> {
        let mut data = vec![F::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = F::one();
        }
        Matrix {
            rows: n,
            cols: n,
            data,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Matrix<F> {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.at(i, j).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn scale(&self, s: &F) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * s.clone()).collect(),
        }
    }

    /// Scale row `i` by `s` (in place), leaving other rows untouched.
    pub fn scale_row(&mut self, i: usize, s: &F) {
        for j in 0..self.cols {
            let v = self.at(i, j).clone() * s.clone();
            self.set(i, j, v);
        }
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = F::zero();
                for k in 0..self.cols {
                    acc = acc + self.at(i, k).clone() * other.at(k, j).clone();
                }
                data.push(acc);
            }
        }
        Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "vector length must match columns");
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (k, x) in v.iter().enumerate() {
                    acc = acc + self.at(i, k).clone() * x.clone();
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, e: u32) -> Matrix<F> {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn add(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn neg(&self) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x.clone()).collect(),
        }
    }

    pub fn det(&self) -> F {
        assert!(self.is_square(), "determinant of a square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = F::one();
        for col in 0..n {
            // Find a pivot at or below the diagonal.
            let pivot = (col..n).find(|&r| !m.at(r, col).is_zero());
            let pivot = match pivot {
                Some(p) => p,
                None => return F::zero(),
            };
            if pivot != col {
                for j in 0..n {
                    let a = m.at(col, j).clone();
                    let b = m.at(pivot, j).clone();
                    m.set(col, j, b);
                    m.set(pivot, j, a);
                }
                det = -det;
            }
            let p = m.at(col, col).clone();
            det = det * p.clone();
            let p_inv = p.inv().expect("pivot is nonzero");
            for r in col + 1..n {
                let factor = m.at(r, col).clone() * p_inv.clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = m.at(r, j).clone() - factor.clone() * m.at(col, j).clone();
                    m.set(r, j, v);
                }
            }
        }
        det
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix<F>> {
        assert!(self.is_square(), "inverse of a square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut inv: Matrix<F> = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.at(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    let (a, b) = (m.at(col, j).clone(), m.at(pivot, j).clone());
                    m.set(col, j, b);
                    m.set(pivot, j, a);
                    let (a, b) = (inv.at(col, j).clone(), inv.at(pivot, j).clone());
                    inv.set(col, j, b);
                    inv.set(pivot, j, a);
                }
            }
            let p_inv = m.at(col, col).inv().expect("pivot is nonzero");
            m.scale_row(col, &p_inv);
            inv.scale_row(col, &p_inv);
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = m.at(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = m.at(r, j).clone() - factor.clone() * m.at(col, j).clone();
                    m.set(r, j, v);
                    let v = inv.at(r, j).clone() - factor.clone() * inv.at(col, j).clone();
                    inv.set(r, j, v);
                }
            }
        }
        Some(inv)
    }

    /// Solve `A x = b` for square invertible `A`; `None` when singular.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        Some(self.inverse()?.mul_vec(b))
    }

    /// `Some(lambda)` iff the matrix equals `lambda * I` (lambda may be zero).
    pub fn as_scalar_multiple_of_identity(&self) -> Option<F> {
        if !self.is_square() {
            return None;
        }
        let lambda = self.at(0, 0).clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let want = if i == j { lambda.clone() } else { F::zero() };
                if *self.at(i, j) != want {
                    return None;
                }
            }
        }
        Some(lambda)
    }

    pub fn trace(&self) -> F {
        assert!(self.is_square());
        let mut acc = F::zero();
        for i in 0..self.rows {
            acc = acc + self.at(i, i).clone();
        }
        acc
    }
}

impl<F: Field> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        self.at(i, j)
    }
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::super::{frac, rat, Rational};
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_int_rows(rows).unwrap()
    }

    #[test]
    fn shape_checks() {
        assert!(Matrix::<Rational>::from_rows(vec![]).is_err());
        assert!(Matrix::from_rows(vec![vec![rat(1)], vec![rat(1), rat(2)]]).is_err());
    }

    #[test]
    fn multiply_and_identity() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let id = Matrix::identity(2);
        assert_eq!(a.mul(&id), a);
        assert_eq!(id.mul(&a), a);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), m(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.mul_vec(&[rat(1), rat(1)]), vec![rat(3), rat(7)]);
    }

    #[test]
    fn determinants() {
        assert_eq!(m(&[&[1, 2], &[3, 4]]).det(), rat(-2));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det(), rat(0));
        assert_eq!(m(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]]).det(), rat(30));
        // Row swaps flip the sign.
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det(), rat(-1));
        // Vandermonde on 1, 2, 3: (2-1)(3-1)(3-2) = 2.
        assert_eq!(
            m(&[&[1, 1, 1], &[1, 2, 4], &[1, 3, 9]]).det(),
            rat(2)
        );
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert_eq!(inv.mul(&a), Matrix::identity(2));
        assert_eq!(inv.at(0, 0), &rat(-2));
        assert_eq!(inv.at(0, 1), &rat(1));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn solve_linear_system() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let x = a.solve(&[rat(5), rat(10)]).unwrap();
        assert_eq!(x, vec![rat(1), rat(3)]);
        assert_eq!(a.mul_vec(&x), vec![rat(5), rat(10)]);
    }

    #[test]
    fn scalar_multiple_detection() {
        assert_eq!(
            Matrix::<Rational>::identity(3)
                .scale(&frac(2, 3))
                .as_scalar_multiple_of_identity(),
            Some(frac(2, 3))
        );
        assert_eq!(m(&[&[1, 1], &[0, 1]]).as_scalar_multiple_of_identity(), None);
    }

    #[test]
    fn powers() {
        let s = m(&[&[0, -1], &[1, -1]]);
        assert_eq!(s.pow(3), Matrix::identity(2));
        assert_ne!(s.pow(1), Matrix::identity(2));
        assert_ne!(s.pow(2), Matrix::identity(2));
    }
}
