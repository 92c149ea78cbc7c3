use std::fmt;
use std::fmt::Display;

use super::{FiniteGroup, GroupElement, GroupError};

/// An element of `(G x G) x| Z/2` where the nontrivial Z/2 element swaps the
/// two factors: `(a, b; s)(c, d; t) = (a c, b d; t)` when `s` is trivial and
/// `(a d, b c; !t)` when `s` swaps.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PairSwapElement<E: GroupElement> {
    pub a: E,
    pub b: E,
    pub swapped: bool,
}

impl<E: GroupElement> PairSwapElement<E> {
    pub fn new(a: E, b: E, swapped: bool) -> PairSwapElement<E> {
        PairSwapElement { a, b, swapped }
    }
}

impl<E: GroupElement> GroupElement for PairSwapElement<E> {
    fn op(&self, other: &PairSwapElement<E>) -> PairSwapElement<E> {
        let (c, d) = if self.swapped {
            (&other.b, &other.a)
        } else {
            (&other.a, &other.b)
        };
        PairSwapElement {
            a: self.a.op(c),
            b: self.b.op(d),
            swapped: self.swapped ^ other.swapped,
        }
    }

    fn inv(&self) -> PairSwapElement<E> {
        if self.swapped {
            PairSwapElement {
                a: self.b.inv(),
                b: self.a.inv(),
                swapped: true,
            }
        } else {
            PairSwapElement {
                a: self.a.inv(),
                b: self.b.inv(),
                swapped: false,
            }
        }
    }
}

impl<E: GroupElement + Display> fmt::Display for PairSwapElement<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}){}",
            self.a,
            self.b,
            if self.swapped { "*" } else { "" }
        )
    }
}

/// The full group `G x G` (or `(G x G) x| Z/2` with the factor swap when
/// `include_swap` is set), built element by element and verified closed.
pub fn product_with_swap<E: GroupElement>(
    base: &FiniteGroup<E>,
    include_swap: bool,
) -> Result<FiniteGroup<PairSwapElement<E>>, GroupError> {
    let mut elements = Vec::new();
    for a in base.elements() {
        for b in base.elements() {
            elements.push(PairSwapElement::new(a.clone(), b.clone(), false));
            if include_swap {
                elements.push(PairSwapElement::new(a.clone(), b.clone(), true));
            }
        }
    }
    FiniteGroup::from_closed_set(elements)
}

#[cfg(test)]
mod tests {
    use super::super::Perm;
    use super::*;

    #[test]
    fn swap_conjugation_exchanges_factors() {
        let s3 = FiniteGroup::closure(
            &[Perm::transposition(3, 0, 1), Perm::cycle(3, &[0, 1, 2])],
            10,
        )
        .unwrap();
        let id = s3.identity().clone();
        let swap = PairSwapElement::new(id.clone(), id.clone(), true);
        let g = PairSwapElement::new(Perm::cycle(3, &[0, 1, 2]), id, false);
        let conj = swap.op(&g).op(&swap.inv());
        assert_eq!(conj.a, *s3.identity());
        assert_eq!(conj.b, Perm::cycle(3, &[0, 1, 2]));
        assert!(!conj.swapped);
    }

    #[test]
    fn product_orders() {
        let s3 = FiniteGroup::closure(
            &[Perm::transposition(3, 0, 1), Perm::cycle(3, &[0, 1, 2])],
            10,
        )
        .unwrap();
        assert_eq!(product_with_swap(&s3, false).unwrap().order(), 36);
        assert_eq!(product_with_swap(&s3, true).unwrap().order(), 72);
    }
}
