use std::fmt;

use crate::groupkit::{FiniteGroup, GroupElement, Perm};

use super::DelPezzoError;

/// A possibly semilinear symmetry of the standard degree-6 surface
/// `{x0*y0 = x1*y1 = x2*y2}` in P^2 x P^2 over the cyclotomic field of
/// conductor `n`, in the normal form
///
/// ```text
///     torus(a, b) . hex(delta, exchange) . galois(k)
/// ```
///
/// read right to left: first the entrywise field automorphism
/// `zeta -> zeta^k`, then the coordinate permutation `delta` (applied to
/// both factors alike) together with an optional exchange of the two
/// factors, and finally the diagonal map
/// `[x0 : zeta^a x1 : zeta^b x2][y0 : zeta^-a y1 : zeta^-b y2]`.
///
/// Composition never leaves this normal form: conjugating a torus element by
/// a hex element permutes its character `(a, b)` through a fixed integer
/// 2x2 representation of the twelve hex symmetries (see
/// [`character_matrix`]), and conjugating by `galois(k)` multiplies the
/// character by `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HexAut {
    n: u32,
    a: u32,
    b: u32,
    delta: Perm,
    exchange: bool,
    galois: u32,
}

fn mod_inverse(k: u32, n: u32) -> Option<u32> {
    if n == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (n as i64, k as i64);
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 == 1 {
        Some(s0.rem_euclid(n as i64) as u32)
    } else {
        None
    }
}

/// The conjugation action of a hex symmetry on a torus character `(a, b)`:
/// the three diagonal exponents `(0, a, b)` are permuted by `delta`, the
/// zeroth slot is renormalized to 0, and an exchange of the factors inverts
/// the character.
fn hex_apply(delta: &Perm, exchange: bool, a: i64, b: i64) -> (i64, i64) {
    let c = [0i64, a, b];
    let mut moved = [0i64; 3];
    for (i, v) in c.iter().enumerate() {
        moved[delta.image(i)] = *v;
    }
    let (mut a2, mut b2) = (moved[1] - moved[0], moved[2] - moved[0]);
    if exchange {
        a2 = -a2;
        b2 = -b2;
    }
    (a2, b2)
}

/// The integer 2x2 matrix (columns = images of the basis characters) by
/// which a hex symmetry acts on the torus character lattice.
pub fn character_matrix(delta: &Perm, exchange: bool) -> [[i64; 2]; 2] {
    let (m00, m10) = hex_apply(delta, exchange, 1, 0);
    let (m01, m11) = hex_apply(delta, exchange, 0, 1);
    [[m00, m01], [m10, m11]]
}

impl HexAut {
    pub fn new(
        n: u32,
        a: u32,
        b: u32,
        delta: Perm,
        exchange: bool,
        galois: u32,
    ) -> Result<HexAut, DelPezzoError> {
        assert!(n >= 1, "modulus must be positive");
        assert_eq!(delta.degree(), 3, "coordinate permutation must have degree 3");
        let k = galois % n;
        if mod_inverse(k, n).is_none() {
            return Err(DelPezzoError::ExponentNotInvertible { k: galois, n });
        }
        Ok(HexAut { n, a: a % n, b: b % n, delta, exchange, galois: k })
    }

    pub fn identity(n: u32) -> HexAut {
        HexAut::new(n, 0, 0, Perm::identity(3), false, 1).expect("1 is invertible")
    }

    /// The diagonal element `[x0 : zeta^a x1 : zeta^b x2][y0 : zeta^-a y1 : zeta^-b y2]`.
    pub fn torus(n: u32, a: u32, b: u32) -> HexAut {
        HexAut::new(n, a, b, Perm::identity(3), false, 1).expect("1 is invertible")
    }

    /// `[x0:x1:x2][y0:y1:y2] -> [x1:x2:x0][y1:y2:y0]`.
    pub fn coordinate_cycle(n: u32) -> HexAut {
        HexAut::new(n, 0, 0, Perm::from_images(vec![2, 0, 1]), false, 1)
            .expect("1 is invertible")
    }

    /// `[x0:x1:x2][y0:y1:y2] -> [x0:x2:x1][y0:y2:y1]`.
    pub fn coordinate_swap(n: u32) -> HexAut {
        HexAut::new(n, 0, 0, Perm::transposition(3, 1, 2), false, 1)
            .expect("1 is invertible")
    }

    /// `(X, Y) -> (Y, X)`.
    pub fn factor_exchange(n: u32) -> HexAut {
        HexAut::new(n, 0, 0, Perm::identity(3), true, 1).expect("1 is invertible")
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    pub fn torus_part(&self) -> (u32, u32) {
        (self.a, self.b)
    }

    pub fn hex_part(&self) -> (&Perm, bool) {
        (&self.delta, self.exchange)
    }

    pub fn galois_exponent(&self) -> u32 {
        self.galois
    }

    /// Linear over the base field, i.e. trivial Galois part.
    pub fn is_linear(&self) -> bool {
        self.galois == 1 || self.n == 1
    }

    pub fn is_torus(&self) -> bool {
        self.is_linear() && self.delta.is_identity() && !self.exchange
    }

    pub fn compose(&self, other: &HexAut) -> Result<HexAut, DelPezzoError> {
        if self.n != other.n {
            return Err(DelPezzoError::ModulusMismatch(self.n, other.n));
        }
        let n = self.n as i64;
        // Push `other`'s torus part through this element's galois and hex
        // parts: galois multiplies the character by k, hex permutes it.
        let (ca, cb) = hex_apply(&self.delta, self.exchange, other.a as i64, other.b as i64);
        let k = self.galois as i64;
        let a = (self.a as i64 + k * ca).rem_euclid(n) as u32;
        let b = (self.b as i64 + k * cb).rem_euclid(n) as u32;
        let galois = ((self.galois as u64 * other.galois as u64) % self.n as u64) as u32;
        HexAut::new(self.n, a, b, self.delta.op(&other.delta), self.exchange ^ other.exchange, galois)
    }
}

impl GroupElement for HexAut {
    fn op(&self, other: &Self) -> Self {
        self.compose(other).expect("hexagon elements share one modulus")
    }

    fn inv(&self) -> Self {
        let kinv = mod_inverse(self.galois, self.n).expect("galois exponent is invertible");
        let dinv = self.delta.inv();
        // (t(a) h s_k)^-1 = t(a') h^-1 s_{k^-1} with a' = -k^-1 (h^-1 |> a).
        let (ca, cb) = hex_apply(&dinv, self.exchange, self.a as i64, self.b as i64);
        let n = self.n as i64;
        let a = (-(kinv as i64) * ca).rem_euclid(n) as u32;
        let b = (-(kinv as i64) * cb).rem_euclid(n) as u32;
        HexAut { n: self.n, a, b, delta: dinv, exchange: self.exchange, galois: kinv }
    }
}

impl fmt::Display for HexAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t({},{})", self.a, self.b)?;
        if !self.delta.is_identity() {
            write!(f, "·{}", self.delta)?;
        }
        if self.exchange {
            write!(f, "·ex")?;
        }
        if self.galois != 1 {
            write!(f, "·g{}", self.galois)?;
        }
        write!(f, " mod {}", self.n)
    }
}

/// The semilinear factor exchange over conductor 6: `(X, Y) -> (g(Y), g(X))`
/// with `g: zeta_6 -> zeta_6^5`.
pub fn galois_twist_6() -> HexAut {
    HexAut::new(6, 0, 0, Perm::identity(3), true, 5).expect("5 is invertible mod 6")
}

/// The full linear symmetry group of the standard degree-6 surface over
/// conductor 6: the torus mu_6 x mu_6 extended by the coordinate
/// permutations and the factor exchange.  Order 432.
pub fn hexagon_group() -> Result<FiniteGroup<HexAut>, DelPezzoError> {
    let gens = vec![
        HexAut::torus(6, 1, 0),
        HexAut::torus(6, 0, 1),
        HexAut::coordinate_cycle(6),
        HexAut::coordinate_swap(6),
        HexAut::factor_exchange(6),
    ];
    Ok(FiniteGroup::closure(&gens, 1000)?)
}

/// Whether a linear element commutes with a semilinear one.
pub fn semilinear_commutes(h: &HexAut, g: &HexAut) -> Result<bool, DelPezzoError> {
    if !h.is_linear() || g.is_linear() {
        return Err(DelPezzoError::NotSemilinearPair);
    }
    Ok(h.compose(g)? == g.compose(h)?)
}

/// All torus elements of `mu_n^2` commuting with the semilinear element `g`,
/// by brute force over all `n^2` characters.  Returned in lexicographic
/// order of the characters `(a, b)`.
pub fn torus_centralizer(n: u32, g: &HexAut) -> Result<Vec<(u32, u32)>, DelPezzoError> {
    if !(2..=18).contains(&n) {
        return Err(DelPezzoError::ModulusOutOfRange(n));
    }
    if g.modulus() != n {
        return Err(DelPezzoError::ModulusMismatch(n, g.modulus()));
    }
    if g.is_linear() {
        return Err(DelPezzoError::NotSemilinearPair);
    }
    let mut fixed = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let t = HexAut::torus(n, a, b);
            if t.compose(g)? == g.compose(&t)? {
                fixed.push((a, b));
            }
        }
    }
    Ok(fixed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Cyclotomic, Field, GaloisMap, Matrix};

    /// Test oracle: the same elements as explicit monomial semilinear maps
    /// on P^2 x P^2, composed by honest matrix arithmetic over the
    /// cyclotomic field.  `HexAut::compose` must match this model.
    #[derive(Clone)]
    struct Monomial {
        n: u32,
        mx: Matrix<Cyclotomic>,
        my: Matrix<Cyclotomic>,
        swap: bool,
        k: u32,
    }

    impl Monomial {
        fn of(h: &HexAut) -> Monomial {
            let n = h.modulus();
            let (a, b) = h.torus_part();
            let (delta, exchange) = h.hex_part();
            // Permutation matrix: new coordinate delta(i) reads old i.
            let zero = Cyclotomic::from_int(0);
            let mut p = vec![vec![zero.clone(); 3]; 3];
            for i in 0..3 {
                p[delta.image(i)][i] = Cyclotomic::from_int(1);
            }
            let p = Matrix::from_rows(p).unwrap();
            let diag = |e0: u32, e1: u32| {
                let mut d = vec![vec![Cyclotomic::from_int(0); 3]; 3];
                d[0][0] = Cyclotomic::from_int(1);
                d[1][1] = Cyclotomic::zeta_pow(n, e0);
                d[2][2] = Cyclotomic::zeta_pow(n, e1);
                Matrix::from_rows(d).unwrap()
            };
            Monomial {
                n,
                mx: diag(a, b).mul(&p),
                my: diag((n - a) % n, (n - b) % n).mul(&p),
                swap: exchange,
                k: h.galois_exponent(),
            }
        }

        fn compose(&self, other: &Monomial) -> Monomial {
            let gal = GaloisMap::new(self.n, self.k).unwrap();
            let twist = |m: &Matrix<Cyclotomic>| {
                let rows = (0..3)
                    .map(|i| (0..3).map(|j| gal.apply(m.at(i, j)).unwrap()).collect())
                    .collect();
                Matrix::from_rows(rows).unwrap()
            };
            let (bx, by) = (twist(&other.mx), twist(&other.my));
            let (mx, my) = if self.swap {
                (self.mx.mul(&by), self.my.mul(&bx))
            } else {
                (self.mx.mul(&bx), self.my.mul(&by))
            };
            Monomial {
                n: self.n,
                mx,
                my,
                swap: self.swap ^ other.swap,
                k: (self.k * other.k) % self.n,
            }
        }

        /// Projectively normalized data (each factor's matrix scaled so its
        /// first nonzero entry is 1).
        fn normal(&self) -> (Matrix<Cyclotomic>, Matrix<Cyclotomic>, bool, u32) {
            let scale_one = |m: &Matrix<Cyclotomic>| {
                let pivot = (0..3)
                    .flat_map(|i| (0..3).map(move |j| (i, j)))
                    .map(|(i, j)| m.at(i, j))
                    .find(|e| !e.is_zero())
                    .unwrap();
                m.scale(&pivot.inv().unwrap())
            };
            (scale_one(&self.mx), scale_one(&self.my), self.swap, self.k)
        }
    }

    fn pool() -> Vec<HexAut> {
        vec![
            HexAut::identity(6),
            HexAut::torus(6, 1, 0),
            HexAut::torus(6, 0, 1),
            HexAut::torus(6, 2, 3),
            HexAut::coordinate_cycle(6),
            HexAut::coordinate_swap(6),
            HexAut::factor_exchange(6),
            galois_twist_6(),
            HexAut::new(6, 0, 0, Perm::identity(3), false, 5).unwrap(),
            HexAut::new(6, 1, 2, Perm::from_images(vec![2, 0, 1]), true, 5).unwrap(),
            HexAut::new(6, 0, 4, Perm::transposition(3, 1, 2), false, 5).unwrap(),
        ]
    }

    #[test]
    fn composition_matches_the_monomial_model() {
        let pool = pool();
        for u in &pool {
            for v in &pool {
                let composed = u.compose(v).unwrap();
                let direct = Monomial::of(u).compose(&Monomial::of(v));
                let via_normal_form = Monomial::of(&composed);
                assert_eq!(
                    direct.normal(),
                    via_normal_form.normal(),
                    "mismatch at {u} * {v}"
                );
            }
        }
    }

    #[test]
    fn inverses_and_associativity() {
        let pool = pool();
        let id = HexAut::identity(6);
        for u in &pool {
            assert_eq!(u.op(&u.inv()), id);
            assert_eq!(u.inv().op(u), id);
        }
        for u in &pool {
            for v in &pool {
                for w in [&pool[3], &pool[7], &pool[9]] {
                    assert_eq!(u.op(v).op(w), u.op(&v.op(w)));
                }
            }
        }
    }

    #[test]
    fn character_matrices_are_faithful() {
        let mut seen = std::collections::BTreeSet::new();
        for delta in Perm::all(3) {
            for exchange in [false, true] {
                seen.insert(character_matrix(&delta, exchange));
            }
        }
        assert_eq!(seen.len(), 12);
        let cycle = HexAut::coordinate_cycle(6);
        assert_eq!(character_matrix(cycle.hex_part().0, false), [[-1, 1], [-1, 0]]);
        let swap = HexAut::coordinate_swap(6);
        assert_eq!(character_matrix(swap.hex_part().0, false), [[0, 1], [1, 0]]);
        assert_eq!(character_matrix(&Perm::identity(3), true), [[-1, 0], [0, -1]]);
    }

    #[test]
    fn conjugation_formulas() {
        // Exchange inverts a torus element.
        let ex = HexAut::factor_exchange(6);
        let t = HexAut::torus(6, 1, 2);
        let conj = ex.compose(&t).unwrap().compose(&ex).unwrap();
        assert_eq!(conj, HexAut::torus(6, 5, 4));

        // The galois part multiplies characters by its exponent.
        let g5 = HexAut::new(6, 0, 0, Perm::identity(3), false, 5).unwrap();
        let conj = g5.compose(&t).unwrap().compose(&g5.inv()).unwrap();
        assert_eq!(conj, HexAut::torus(6, 5, 4));
    }

    #[test]
    fn modulus_and_exponent_validation() {
        assert_eq!(
            HexAut::new(6, 0, 0, Perm::identity(3), false, 2),
            Err(DelPezzoError::ExponentNotInvertible { k: 2, n: 6 })
        );
        let t4 = HexAut::torus(4, 1, 0);
        let t6 = HexAut::torus(6, 1, 0);
        assert_eq!(t4.compose(&t6), Err(DelPezzoError::ModulusMismatch(4, 6)));
    }

    #[test]
    fn full_symmetry_group_has_order_432() {
        let group = hexagon_group().unwrap();
        assert_eq!(group.order(), 432);

        let torus: Vec<HexAut> =
            group.elements().iter().filter(|h| h.is_torus()).cloned().collect();
        assert_eq!(torus.len(), 36);
        let torus = FiniteGroup::from_closed_set(torus).unwrap();
        assert!(torus.is_abelian());
        assert_eq!(torus.exponent(), 6);
        assert!(torus.is_normal_in(&group).unwrap());

        let quotient = group.coset_action(&torus).unwrap();
        assert_eq!(quotient.order(), 12);
        // Dihedral of order 12: one identity, seven involutions, two
        // elements of order 3, two of order 6.
        let hist: Vec<(usize, usize)> =
            quotient.order_histogram().into_iter().collect();
        assert_eq!(hist, vec![(1, 1), (2, 7), (3, 2), (6, 2)]);
    }

    #[test]
    fn everything_commutes_with_the_twist() {
        let group = hexagon_group().unwrap();
        let twist = galois_twist_6();
        for h in group.elements() {
            assert!(semilinear_commutes(h, &twist).unwrap(), "fails at {h}");
        }
        // Precondition violations.
        assert_eq!(
            semilinear_commutes(&twist, &twist),
            Err(DelPezzoError::NotSemilinearPair)
        );
        assert_eq!(
            semilinear_commutes(&HexAut::identity(6), &HexAut::torus(6, 1, 0)),
            Err(DelPezzoError::NotSemilinearPair)
        );
    }

    #[test]
    fn twist_centralizer_is_the_full_torus_at_conductor_six() {
        let fixed = torus_centralizer(6, &galois_twist_6()).unwrap();
        assert_eq!(fixed.len(), 36);
    }

    #[test]
    fn nontrivial_hex_parts_pin_the_centralizer_to_at_most_n() {
        for n in [6u32, 18] {
            let exponents: Vec<u32> =
                (2..n).filter(|k| mod_inverse(*k, n).is_some()).collect();
            for delta in Perm::all(3) {
                for exchange in [false, true] {
                    for &k in &exponents {
                        let g = HexAut::new(n, 0, 0, delta.clone(), exchange, k).unwrap();
                        let count = torus_centralizer(n, &g).unwrap().len();
                        if !delta.is_identity() {
                            // Transpositions and 3-cycles (with or without
                            // the exchange) admit at most n fixed characters.
                            assert!(
                                count <= n as usize,
                                "hex {delta} ex={exchange} k={k} mod {n}: {count}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn centralizer_input_validation() {
        let g = galois_twist_6();
        assert_eq!(torus_centralizer(19, &g), Err(DelPezzoError::ModulusOutOfRange(19)));
        assert_eq!(torus_centralizer(4, &g), Err(DelPezzoError::ModulusMismatch(4, 6)));
        assert_eq!(
            torus_centralizer(6, &HexAut::torus(6, 1, 1)),
            Err(DelPezzoError::NotSemilinearPair)
        );
    }
}
