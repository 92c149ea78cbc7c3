use std::fmt;
use std::fmt::Debug;
use std::hash::Hash;

use itertools::Itertools;

/// An element of some group, with the operation and inverse implemented on
/// the element itself. `Eq`/`Hash` must be structural equality of the group
/// element (canonical representatives where applicable); `Ord` is any total
/// order and is only used for deterministic tie-breaking.
pub trait GroupElement: Clone + Eq + Hash + Ord + Debug {
    fn op(&self, other: &Self) -> Self;
    fn inv(&self) -> Self;
}

/// A permutation of `0..n`, stored as the image list: `p[i]` is the image
/// of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm {
    p: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            p: (0..n as u8).collect(),
        }
    }

    /// Build from the image list; panics unless it is a bijection.
    pub fn from_images(p: Vec<u8>) -> Perm {
        let n = p.len();
        let mut seen = vec![false; n];
        for &i in &p {
            assert!((i as usize) < n && !seen[i as usize], "not a permutation");
            seen[i as usize] = true;
        }
        Perm { p }
    }

    /// The cycle `(c[0] c[1] ... c[k-1])` on `0..n`, fixing everything else.
    pub fn cycle(n: usize, c: &[usize]) -> Perm {
        let mut p: Vec<u8> = (0..n as u8).collect();
        for i in 0..c.len() {
            p[c[i]] = c[(i + 1) % c.len()] as u8;
        }
        Perm::from_images(p)
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Perm {
        Perm::cycle(n, &[i, j])
    }

    pub fn degree(&self) -> usize {
        self.p.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.p[i] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.p
    }

    /// All n! permutations of `0..n`, in lexicographic order of image lists.
    pub fn all(n: usize) -> Vec<Perm> {
        (0..n as u8)
            .permutations(n)
            .map(|p| Perm { p })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.p.iter().enumerate().all(|(i, &v)| i == v as usize)
    }
}

impl GroupElement for Perm {
    /// Function composition: `(a.op(b))(i) = a(b(i))`.
    fn op(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm {
            p: other.p.iter().map(|&i| self.p[i as usize]).collect(),
        }
    }

    fn inv(&self) -> Perm {
        let mut q = vec![0u8; self.p.len()];
        for (i, &v) in self.p.iter().enumerate() {
            q[v as usize] = i as u8;
        }
        Perm { p: q }
    }
}

impl fmt::Display for Perm {
    /// Cycle notation, e.g. `(0 1)(2 4 3)`; identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut wrote = false;
        for start in 0..self.degree() {
            if seen[start] || self.image(start) == start {
                continue;
            }
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                first = false;
                write!(f, "{i}")?;
                i = self.image(i);
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}
