use std::collections::BTreeMap;
use std::fmt;

use super::{ExactError, Field, Matrix, UniPoly};

/// The variables of a polynomial ring, each with a positive weight.
/// Ordinary projective coordinates all have weight 1; weighted projective
/// spaces like P(3, 1, 1, 2) assign the listed weights.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VarTable {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl VarTable {
    /// All-weight-1 variables.
    pub fn new(names: &[&str]) -> VarTable {
        VarTable::weighted(&names.iter().map(|&n| (n, 1)).collect::<Vec<_>>())
    }

    pub fn weighted(vars: &[(&str, u32)]) -> VarTable {
        assert!(!vars.is_empty(), "a variable table needs variables");
        assert!(vars.iter().all(|&(_, w)| w > 0), "weights must be positive");
        VarTable {
            names: vars.iter().map(|&(n, _)| n.to_string()).collect(),
            weights: vars.iter().map(|&(_, w)| w).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn index_of(&self, name: &str) -> Result<usize, ExactError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| ExactError::UnknownVariable(name.to_string()))
    }

    /// Weighted degree of an exponent vector.
    pub fn weighted_degree(&self, exps: &[u32]) -> u32 {
        exps.iter()
            .zip(&self.weights)
            .map(|(e, w)| e * w)
            .sum()
    }
}

/// Sparse multivariate polynomial over a fixed variable table.
/// Terms are kept in a `BTreeMap` keyed by the exponent vector, so iteration
/// order (and hence `Display`, hashing, equality) is deterministic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiPoly<F: Field> {
    table: VarTable,
    terms: BTreeMap<Vec<u32>, F>,
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(table: &VarTable) -> MultiPoly<F> {
        MultiPoly {
            table: table.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(table: &VarTable, v: F) -> MultiPoly<F> {
        let mut p = MultiPoly::zero(table);
        p.add_term(vec![0; table.len()], v);
        p
    }

    pub fn one(table: &VarTable) -> MultiPoly<F> {
        MultiPoly::constant(table, F::one())
    }

    /// The variable with index `i`.
    pub fn var(table: &VarTable, i: usize) -> MultiPoly<F> {
        assert!(i < table.len(), "variable index out of range");
        let mut exps = vec![0; table.len()];
        exps[i] = 1;
        let mut p = MultiPoly::zero(table);
        p.add_term(exps, F::one());
        p
    }

    pub fn var_named(table: &VarTable, name: &str) -> Result<MultiPoly<F>, ExactError> {
        Ok(MultiPoly::var(table, table.index_of(name)?))
    }

    /// A single term `coeff * prod names[i]^exps[i]`, variables by name.
    pub fn monomial(
        table: &VarTable,
        vars: &[(&str, u32)],
        coeff: F,
    ) -> Result<MultiPoly<F>, ExactError> {
        let mut exps = vec![0; table.len()];
        for &(name, e) in vars {
            exps[table.index_of(name)?] += e;
        }
        let mut p = MultiPoly::zero(table);
        p.add_term(exps, coeff);
        Ok(p)
    }

    fn add_term(&mut self, exps: Vec<u32>, coeff: F) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn table(&self) -> &VarTable {
        &self.table
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &F)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> F {
        self.terms.get(exps).cloned().unwrap_or_else(F::zero)
    }

    fn assert_same_table(&self, other: &MultiPoly<F>) {
        assert_eq!(
            self.table, other.table,
            "operands must share a variable table"
        );
    }

    pub fn add(&self, other: &MultiPoly<F>) -> MultiPoly<F> {
        self.assert_same_table(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly<F>) -> MultiPoly<F> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly<F> {
        MultiPoly {
            table: self.table.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly<F>) -> MultiPoly<F> {
        self.assert_same_table(other);
        let mut out = MultiPoly::zero(&self.table);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn scale(&self, s: &F) -> MultiPoly<F> {
        let mut out = MultiPoly::zero(&self.table);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone() * s.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> MultiPoly<F> {
        let mut acc = MultiPoly::one(&self.table);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, point: &[F]) -> Result<F, ExactError> {
        if point.len() != self.table.len() {
            return Err(ExactError::DimensionMismatch {
                want: self.table.len(),
                got: point.len(),
            });
        }
        let mut acc = F::zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (x, &e) in point.iter().zip(exps) {
                for _ in 0..e {
                    term = term * x.clone();
                }
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    /// Substitute `images[i]` for variable `i`. The images may live in a
    /// different variable table (all in the same one); the result lives in
    /// the images' table.
    pub fn substitute(&self, images: &[MultiPoly<F>]) -> Result<MultiPoly<F>, ExactError> {
        if images.len() != self.table.len() {
            return Err(ExactError::DimensionMismatch {
                want: self.table.len(),
                got: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.table.clone(),
            None => self.table.clone(),
        };
        if images.iter().any(|p| p.table != target) {
            return Err(ExactError::TableMismatch);
        }
        let mut acc = MultiPoly::zero(&target);
        for (exps, coeff) in &self.terms {
            let mut term = MultiPoly::constant(&target, coeff.clone());
            for (img, &e) in images.iter().zip(exps) {
                term = term.mul(&img.pow(e));
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Substitute variables by the linear forms given by the rows of `m`:
    /// variable `i` maps to `sum_j m[i][j] * var_j`. In a weighted table the
    /// substitution must not mix weights: `m[i][j] != 0` requires
    /// `weight(i) == weight(j)`.
    pub fn compose_linear(&self, m: &Matrix<F>) -> Result<MultiPoly<F>, ExactError> {
        let n = self.table.len();
        if m.nrows() != n || m.ncols() != n {
            return Err(ExactError::DimensionMismatch {
                want: n,
                got: m.nrows(),
            });
        }
        for i in 0..n {
            for j in 0..n {
                if !m.at(i, j).is_zero() && self.table.weight(i) != self.table.weight(j) {
                    return Err(ExactError::WeightMixing);
                }
            }
        }
        let images: Vec<MultiPoly<F>> = (0..n)
            .map(|i| {
                let mut img = MultiPoly::zero(&self.table);
                for j in 0..n {
                    let mut exps = vec![0; n];
                    exps[j] = 1;
                    img.add_term(exps, m.at(i, j).clone());
                }
                img
            })
            .collect();
        self.substitute(&images)
    }

    /// Largest weighted degree among the terms; `None` for the zero
    /// polynomial.
    pub fn weighted_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| self.table.weighted_degree(e))
            .max()
    }

    /// Every term has the same weighted degree (vacuously true for zero).
    pub fn is_weighted_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|e| self.table.weighted_degree(e));
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|x| x == d),
        }
    }

    /// Weighted-homogeneous of the given degree (zero passes for any degree).
    pub fn is_weighted_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms
            .keys()
            .all(|e| self.table.weighted_degree(e) == d)
    }

    /// `Some(lambda)` iff `other == lambda * self` with `self` nonzero.
    pub fn ratio_to(&self, other: &MultiPoly<F>) -> Option<F> {
        self.assert_same_table(other);
        let (exps, lead) = self.terms.iter().next()?;
        let lambda = other.coeff(exps) * lead.inv()?;
        if &self.scale(&lambda) == other {
            Some(lambda)
        } else {
            None
        }
    }
}

impl<F: Field> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let is_const = exps.iter().all(|&e| e == 0);
            if is_const || !coeff.is_one() {
                write!(f, "({coeff})")?;
            }
            let mut printed_var = false;
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if printed_var || !coeff.is_one() {
                    write!(f, "*")?;
                }
                printed_var = true;
                write!(f, "{}", self.table.name(i))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Do two binary forms (homogeneous, two weight-1 variables) share a common
/// projective root over the algebraic closure? Decided exactly: a shared
/// root at [1:0] shows up as vanishing leading coefficients, and affine
/// shared roots as a nonconstant gcd of the dehomogenizations.
pub fn binary_form_common_root<F: Field>(
    f: &MultiPoly<F>,
    g: &MultiPoly<F>,
) -> Result<bool, ExactError> {
    for p in [f, g] {
        if p.table.len() != 2
            || p.table.weights() != [1, 1]
            || !p.is_weighted_homogeneous()
        {
            return Err(ExactError::NotBinaryForm);
        }
    }
    if f.table != g.table {
        return Err(ExactError::TableMismatch);
    }
    // The zero form vanishes everywhere.
    if f.is_zero() || g.is_zero() {
        return Ok(true);
    }
    let dehomogenize = |p: &MultiPoly<F>| {
        let d = p.weighted_degree().unwrap() as usize;
        let mut c = vec![F::zero(); d + 1];
        for (exps, coeff) in &p.terms {
            c[exps[0] as usize] = coeff.clone();
        }
        UniPoly::new(c)
    };
    let fu = dehomogenize(f);
    let gu = dehomogenize(g);
    // [1:0] is a root of a form of degree d iff the x^d coefficient is
    // missing, i.e. the dehomogenization in x drops degree.
    let drops = |p: &MultiPoly<F>, u: &UniPoly<F>| {
        u.degree().map(|d| d as u32) != p.weighted_degree()
    };
    if drops(f, &fu) && drops(g, &gu) {
        return Ok(true);
    }
    Ok(fu.gcd(&gu).degree().unwrap_or(0) >= 1)
}

#[cfg(test)]
mod tests {
    use super::super::{frac, rat, Rational};
    use super::*;

    fn xyz() -> VarTable {
        VarTable::new(&["x", "y", "z"])
    }

    fn poly(table: &VarTable, s: &[(&[(&str, u32)], i64)]) -> MultiPoly<Rational> {
        let mut acc = MultiPoly::zero(table);
        for &(vars, c) in s {
            acc = acc.add(&MultiPoly::monomial(table, vars, rat(c)).unwrap());
        }
        acc
    }

    #[test]
    fn arithmetic_basics() {
        let t = xyz();
        let x = MultiPoly::<Rational>::var_named(&t, "x").unwrap();
        let y = MultiPoly::var_named(&t, "y").unwrap();
        let sum = x.add(&y);
        let sq = sum.mul(&sum);
        // (x + y)^2 = x^2 + 2xy + y^2.
        assert_eq!(sq.num_terms(), 3);
        assert_eq!(sq.coeff(&[1, 1, 0]), rat(2));
        assert_eq!(sq, sum.pow(2));
        assert!(sq.sub(&sq).is_zero());
        assert!(MultiPoly::<Rational>::var_named(&t, "q").is_err());
    }

    #[test]
    fn eval_points() {
        let t = xyz();
        let p = poly(&t, &[(&[("x", 2)], 1), (&[("y", 1), ("z", 1)], -3)]);
        // x^2 - 3yz at (2, 1, 5) = 4 - 15 = -11.
        assert_eq!(p.eval(&[rat(2), rat(1), rat(5)]).unwrap(), rat(-11));
        assert!(p.eval(&[rat(0)]).is_err());
    }

    #[test]
    fn linear_substitution() {
        let t = xyz();
        let p = poly(&t, &[(&[("x", 2)], 1), (&[("y", 2)], 1), (&[("z", 2)], 1)]);
        // Cyclic permutation x->y->z->x leaves x^2+y^2+z^2 alone.
        let m = Matrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]).unwrap();
        assert_eq!(p.compose_linear(&m).unwrap(), p);
        // x -> x + y changes it.
        let shear = Matrix::from_int_rows(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        let q = p.compose_linear(&shear).unwrap();
        assert_eq!(q.coeff(&[1, 1, 0]), rat(2));
    }

    #[test]
    fn weight_mixing_rejected() {
        let t = VarTable::weighted(&[("w", 2), ("x", 1), ("y", 1)]);
        let p = MultiPoly::<Rational>::var(&t, 0);
        // w -> x is not weight-preserving.
        let bad = Matrix::from_int_rows(&[&[0, 1, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(p.compose_linear(&bad), Err(ExactError::WeightMixing));
        // w -> -w, swap x and y is fine.
        let good = Matrix::from_int_rows(&[&[-1, 0, 0], &[0, 0, 1], &[0, 1, 0]]).unwrap();
        assert!(p.compose_linear(&good).is_ok());
    }

    #[test]
    fn weighted_homogeneity() {
        let t = VarTable::weighted(&[("w", 3), ("x", 1), ("y", 1), ("z", 2)]);
        // w^2 - z^3 - x^4 z - x^6 is weighted-homogeneous of degree 6.
        let p = poly(
            &t,
            &[
                (&[("w", 2)], 1),
                (&[("z", 3)], -1),
                (&[("x", 4), ("z", 1)], -1),
                (&[("x", 6)], -1),
            ],
        );
        assert!(p.is_weighted_homogeneous());
        assert!(p.is_weighted_homogeneous_of_degree(6));
        assert!(!p.is_weighted_homogeneous_of_degree(5));
        let q = p.add(&MultiPoly::var(&t, 1));
        assert!(!q.is_weighted_homogeneous());
        assert!(MultiPoly::<Rational>::zero(&t).is_weighted_homogeneous_of_degree(17));
    }

    #[test]
    fn cross_table_substitution() {
        // Plug the parametrization (a^2, ab, b^2) into xz - y^2: identically 0.
        let t = xyz();
        let ab = VarTable::new(&["a", "b"]);
        let conic = poly(&t, &[(&[("x", 1), ("z", 1)], 1), (&[("y", 2)], -1)]);
        let images = vec![
            poly(&ab, &[(&[("a", 2)], 1)]),
            poly(&ab, &[(&[("a", 1), ("b", 1)], 1)]),
            poly(&ab, &[(&[("b", 2)], 1)]),
        ];
        assert!(conic.substitute(&images).unwrap().is_zero());
    }

    #[test]
    fn ratios() {
        let t = xyz();
        let p = poly(&t, &[(&[("x", 1)], 2), (&[("y", 1)], -4)]);
        let q = p.scale(&frac(-3, 2));
        assert_eq!(p.ratio_to(&q), Some(frac(-3, 2)));
        let r = poly(&t, &[(&[("x", 1)], 2), (&[("y", 1)], 4)]);
        assert_eq!(p.ratio_to(&r), None);
    }

    #[test]
    fn common_roots_of_binary_forms() {
        let ab = VarTable::new(&["a", "b"]);
        let f = poly(&ab, &[(&[("a", 1)], 1), (&[("b", 1)], -1)]); // a - b
        let g = poly(&ab, &[(&[("a", 2)], 1), (&[("b", 2)], -1)]); // a^2 - b^2
        let h = poly(&ab, &[(&[("a", 1)], 1), (&[("b", 1)], 1)]); // a + b
        assert!(binary_form_common_root(&f, &g).unwrap());
        assert!(!binary_form_common_root(&f, &h).unwrap());
        // a^2 + b^2 and a - b share no rational root, and no root in
        // closure either (the gcd is 1).
        let s = poly(&ab, &[(&[("a", 2)], 1), (&[("b", 2)], 1)]);
        assert!(!binary_form_common_root(&s, &f).unwrap());
        // ... but a^2 + b^2 and a^4 - b^4 share the roots a = +-i b.
        let q = poly(&ab, &[(&[("a", 4)], 1), (&[("b", 4)], -1)]);
        assert!(binary_form_common_root(&s, &q).unwrap());
        // Roots at infinity: b and b^2 share [1:0].
        let b1 = poly(&ab, &[(&[("b", 1)], 1)]);
        let b2 = poly(&ab, &[(&[("b", 2)], 1)]);
        assert!(binary_form_common_root(&b1, &b2).unwrap());
        // b and a share no root.
        let a1 = poly(&ab, &[(&[("a", 1)], 1)]);
        assert!(!binary_form_common_root(&b1, &a1).unwrap());
        // Zero shares everything.
        let z = MultiPoly::<Rational>::zero(&ab);
        assert!(binary_form_common_root(&z, &f).unwrap());
        // Not a binary form: wrong variable count.
        let t3 = xyz();
        let p3 = MultiPoly::<Rational>::var(&t3, 0);
        assert!(binary_form_common_root(&p3, &p3).is_err());
    }
}
