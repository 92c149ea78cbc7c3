use std::fmt;
use std::ops::RangeInclusive;

use itertools::Itertools;

use super::PicardError;

/// A divisor class `d*L - m_1*E_1 - ... - m_r*E_r` on the blow-up of the
/// plane at `r` points, written in the basis of the pullback of a line `L`
/// and the exceptional classes `E_i`.
///
/// The intersection pairing is `L^2 = 1`, `E_i^2 = -1`, all cross terms 0,
/// so `<(d; m), (d'; m')> = dd' - sum m_i m'_i`.  In this convention the
/// class `E_i` itself is `(0; ..., -1, ...)` with the `-1` in slot `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PicClass {
    d: i64,
    m: Vec<i64>,
}

impl PicClass {
    pub fn new(d: i64, m: Vec<i64>) -> PicClass {
        PicClass { d, m }
    }

    /// The class of the `i`-th exceptional curve (0-indexed).
    pub fn exceptional(r: usize, i: usize) -> PicClass {
        assert!(i < r, "exceptional index {i} out of range for rank {r}");
        let mut m = vec![0; r];
        m[i] = -1;
        PicClass { d: 0, m }
    }

    /// The canonical class `K = (-3; -1, ..., -1)`.
    pub fn canonical_class(r: usize) -> PicClass {
        PicClass { d: -3, m: vec![-1; r] }
    }

    pub fn rank(&self) -> usize {
        self.m.len()
    }

    pub fn degree(&self) -> i64 {
        self.d
    }

    pub fn multiplicities(&self) -> &[i64] {
        &self.m
    }

    pub fn pairing(&self, other: &PicClass) -> Result<i64, PicardError> {
        if self.rank() != other.rank() {
            return Err(PicardError::RankMismatch(self.rank(), other.rank()));
        }
        let cross: i64 = self.m.iter().zip(&other.m).map(|(a, b)| a * b).sum();
        Ok(self.d * other.d - cross)
    }

    pub fn self_intersection(&self) -> i64 {
        self.pairing(self).expect("same rank")
    }

    pub fn neg(&self) -> PicClass {
        PicClass { d: -self.d, m: self.m.iter().map(|x| -x).collect() }
    }

    pub fn add(&self, other: &PicClass) -> Result<PicClass, PicardError> {
        if self.rank() != other.rank() {
            return Err(PicardError::RankMismatch(self.rank(), other.rank()));
        }
        Ok(PicClass {
            d: self.d + other.d,
            m: self.m.iter().zip(&other.m).map(|(a, b)| a + b).collect(),
        })
    }

    /// A (-1)-class: self-intersection -1 and `<C, K> = -1`.
    pub fn is_minus_one(&self) -> bool {
        let k = PicClass::canonical_class(self.rank());
        self.self_intersection() == -1 && self.pairing(&k).expect("same rank") == -1
    }
}

impl fmt::Display for PicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.d)?;
        for (i, mi) in self.m.iter().enumerate() {
            write!(f, "{}{}", if i == 0 { " " } else { "," }, mi)?;
        }
        write!(f, ")")
    }
}

fn check_rank(r: usize) -> Result<(), PicardError> {
    if (1..=8).contains(&r) {
        Ok(())
    } else {
        Err(PicardError::RankOutOfRange(r))
    }
}

/// All (-1)-classes of rank `r`, found by exhaustive search over the box
/// `d in [0, 6]`, `m_i in [-1, 3]`.  That box contains every (-1)-class for
/// `r <= 8` (the largest degree occurring is the sextic class `(6; 3, 2^7)`),
/// which `enumerate_minus_one_in_box` lets a caller double-check by
/// enlarging the box.  Output is sorted, so the order is deterministic.
pub fn enumerate_minus_one(r: usize) -> Result<Vec<PicClass>, PicardError> {
    enumerate_minus_one_in_box(r, 0..=6, -1..=3)
}

/// Same search over a caller-chosen box.
pub fn enumerate_minus_one_in_box(
    r: usize,
    d_range: RangeInclusive<i64>,
    m_range: RangeInclusive<i64>,
) -> Result<Vec<PicClass>, PicardError> {
    check_rank(r)?;
    let mut found = Vec::new();
    for d in d_range {
        let mut stack = vec![Vec::with_capacity(r)];
        while let Some(m) = stack.pop() {
            if m.len() == r {
                let c = PicClass::new(d, m);
                if c.is_minus_one() {
                    found.push(c);
                }
                continue;
            }
            // Push in reverse so the smaller value is explored first.
            for v in m_range.clone().rev() {
                let mut next = m.clone();
                next.push(v);
                stack.push(next);
            }
        }
    }
    found.sort();
    Ok(found)
}

/// All unordered pairs `{A, B}` with `A^2 = B^2 = 0` and `A + B = -K`,
/// searched over the same box as `enumerate_minus_one`.  At rank 5 these are
/// the five pairs `{L - E_i, 2L - sum_{j != i} E_j}`; each pair satisfies
/// `<A, B> = 2` and `<A, K> = <B, K> = -2`.
pub fn anticanonical_pairs(r: usize) -> Result<Vec<(PicClass, PicClass)>, PicardError> {
    check_rank(r)?;
    let minus_k = PicClass::canonical_class(r).neg();
    let mut pairs = Vec::new();
    for d in 0..=6i64 {
        let mut stack = vec![Vec::with_capacity(r)];
        while let Some(m) = stack.pop() {
            if m.len() == r {
                let a = PicClass::new(d, m);
                if a.self_intersection() != 0 {
                    continue;
                }
                let b = minus_k.add(&a.neg()).expect("same rank");
                if b.self_intersection() == 0 && a <= b {
                    pairs.push((a, b));
                }
                continue;
            }
            for v in (-1..=3i64).rev() {
                let mut next = m.clone();
                next.push(v);
                stack.push(next);
            }
        }
    }
    pairs.sort();
    Ok(pairs)
}

/// All 4-element subsets of `classes` that are pairwise disjoint (pairing 0),
/// returned as sorted index quadruples in lexicographic order.
pub fn skew_quadruples(classes: &[PicClass]) -> Result<Vec<[usize; 4]>, PicardError> {
    let n = classes.len();
    let mut quads = Vec::new();
    for combo in (0..n).combinations(4) {
        let mut skew = true;
        'pairs: for i in 0..4 {
            for j in i + 1..4 {
                if classes[combo[i]].pairing(&classes[combo[j]])? != 0 {
                    skew = false;
                    break 'pairs;
                }
            }
        }
        if skew {
            quads.push([combo[0], combo[1], combo[2], combo[3]]);
        }
    }
    Ok(quads)
}

#[cfg(test)]
mod tests {
    use super::*;

    use itertools::Itertools;

    #[test]
    fn pairing_and_canonical_class() {
        let k = PicClass::canonical_class(5);
        assert_eq!(k.self_intersection(), 9 - 5);
        let e0 = PicClass::exceptional(5, 0);
        assert_eq!(e0.self_intersection(), -1);
        assert_eq!(e0.pairing(&k).unwrap(), -1);
        assert!(e0.is_minus_one());
        // A line through two of the points.
        let l01 = PicClass::new(1, vec![1, 1, 0, 0, 0]);
        assert!(l01.is_minus_one());
        assert_eq!(l01.pairing(&e0).unwrap(), 1);
        let bad = PicClass::new(1, vec![1, 1]);
        assert!(matches!(l01.pairing(&bad), Err(PicardError::RankMismatch(5, 2))));
    }

    /// Independent construction of the (-1)-classes for small rank from the
    /// known families: exceptional curves, lines through two points, and
    /// conics through five points.
    fn minus_one_families(r: usize) -> Vec<PicClass> {
        let mut v: Vec<PicClass> = (0..r).map(|i| PicClass::exceptional(r, i)).collect();
        for i in 0..r {
            for j in i + 1..r {
                let mut m = vec![0; r];
                m[i] = 1;
                m[j] = 1;
                v.push(PicClass::new(1, m));
            }
        }
        if r >= 5 {
            for skip in (0..r).combinations(r - 5) {
                let mut m = vec![1; r];
                for s in skip {
                    m[s] = 0;
                }
                v.push(PicClass::new(2, m));
            }
        }
        v.sort();
        v
    }

    #[test]
    fn box_search_matches_family_construction() {
        for (r, want) in [(3, 6), (4, 10), (5, 16), (6, 27)] {
            let classes = enumerate_minus_one(r).unwrap();
            assert_eq!(classes.len(), want, "rank {r}");
            assert_eq!(classes, minus_one_families(r), "rank {r}");
        }
    }

    #[test]
    fn box_is_large_enough() {
        // Enlarging the search box must not find new classes.
        for r in 1..=6 {
            let standard = enumerate_minus_one(r).unwrap();
            let bigger = enumerate_minus_one_in_box(r, 0..=8, -3..=4).unwrap();
            assert_eq!(standard, bigger, "rank {r}");
        }
    }

    #[test]
    fn full_counts_up_to_rank_eight() {
        // Classical counts on del Pezzo surfaces of degrees 9-r.
        let counts: Vec<usize> =
            (1..=8).map(|r| enumerate_minus_one(r).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 3, 6, 10, 16, 27, 56, 240]);
    }

    #[test]
    fn rank_bounds_are_enforced() {
        assert!(matches!(enumerate_minus_one(0), Err(PicardError::RankOutOfRange(0))));
        assert!(matches!(enumerate_minus_one(9), Err(PicardError::RankOutOfRange(9))));
    }

    #[test]
    fn square_zero_pairs_at_rank_five() {
        let pairs = anticanonical_pairs(5).unwrap();
        assert_eq!(pairs.len(), 5);
        let k = PicClass::canonical_class(5);
        let minus_k = k.neg();
        for (a, b) in &pairs {
            assert_eq!(a.self_intersection(), 0);
            assert_eq!(b.self_intersection(), 0);
            assert_eq!(a.add(b).unwrap(), minus_k);
            assert_eq!(a.pairing(b).unwrap(), 2);
            assert_eq!(a.pairing(&k).unwrap(), -2);
            assert_eq!(b.pairing(&k).unwrap(), -2);
        }
        // The five pairs are exactly {L - E_i, 2L - sum_{j != i} E_j}.
        for i in 0..5 {
            let mut ma = vec![0; 5];
            ma[i] = 1;
            let a = PicClass::new(1, ma);
            let mut mb = vec![1; 5];
            mb[i] = 0;
            let b = PicClass::new(2, mb);
            let pair = if a <= b { (a, b) } else { (b, a) };
            assert!(pairs.contains(&pair), "missing pair for i = {i}");
        }
    }

    #[test]
    fn skew_quadruples_at_rank_four() {
        let classes = enumerate_minus_one(4).unwrap();
        let quads = skew_quadruples(&classes).unwrap();
        assert_eq!(quads.len(), 5);
        // The four exceptional classes form one of the quadruples.
        let exceptional: Vec<usize> = (0..4)
            .map(|i| {
                let e = PicClass::exceptional(4, i);
                classes.iter().position(|c| *c == e).unwrap()
            })
            .sorted()
            .collect();
        assert!(quads.iter().any(|q| q.to_vec() == exceptional));
        // Each quadruple really is pairwise skew.
        for q in &quads {
            for i in 0..4 {
                for j in i + 1..4 {
                    assert_eq!(classes[q[i]].pairing(&classes[q[j]]).unwrap(), 0);
                }
            }
        }
    }
}
