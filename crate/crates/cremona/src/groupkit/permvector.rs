use std::fmt;

use super::{GroupElement, Perm};

/// An element of the semidirect product (F_2)^n x| Sym_n: a bit vector
/// together with a coordinate permutation. The product is
/// `(v, s)(w, t) = (v + s(w), st)`, where `s(w)` moves bit `i` of `w` to
/// position `s(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PermVectorElement {
    mask: u32,
    perm: Perm,
}

impl PermVectorElement {
    pub fn new(mask: u32, perm: Perm) -> PermVectorElement {
        assert!(
            mask < (1 << perm.degree()),
            "mask has bits outside the permutation degree"
        );
        PermVectorElement { mask, perm }
    }

    pub fn pure_vector(mask: u32, degree: usize) -> PermVectorElement {
        PermVectorElement::new(mask, Perm::identity(degree))
    }

    pub fn pure_perm(perm: Perm) -> PermVectorElement {
        PermVectorElement::new(0, perm)
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    /// Number of set bits in the vector part.
    pub fn vector_weight(&self) -> u32 {
        self.mask.count_ones()
    }

    fn permute_mask(perm: &Perm, mask: u32) -> u32 {
        let mut out = 0;
        for i in 0..perm.degree() {
            if mask & (1 << i) != 0 {
                out |= 1 << perm.image(i);
            }
        }
        out
    }
}

impl GroupElement for PermVectorElement {
    fn op(&self, other: &PermVectorElement) -> PermVectorElement {
        PermVectorElement {
            mask: self.mask ^ Self::permute_mask(&self.perm, other.mask),
            perm: self.perm.op(&other.perm),
        }
    }

    fn inv(&self) -> PermVectorElement {
        let perm_inv = self.perm.inv();
        PermVectorElement {
            mask: Self::permute_mask(&perm_inv, self.mask),
            perm: perm_inv,
        }
    }
}

impl fmt::Display for PermVectorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits: String = (0..self.perm.degree())
            .map(|i| if self.mask & (1 << i) != 0 { '1' } else { '0' })
            .collect();
        write!(f, "[{bits}]{}", self.perm)
    }
}
