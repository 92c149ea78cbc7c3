//! Generic finite-group machinery: closure from generators, verification of
//! multiplication tables, presentations, element orders, centers, normality,
//! and a few product constructions (direct products with a coordinate swap,
//! vector-permutation semidirect products).
//!
//! Everything is computed by explicit enumeration over concrete elements, so
//! every order reported here is the exact size of an explicitly constructed
//! set that was checked to be closed under the operation.

mod element;
mod group;
mod pairswap;
mod permvector;

pub use element::{GroupElement, Perm};
pub use group::FiniteGroup;
pub use pairswap::{product_with_swap, PairSwapElement};
pub use permvector::PermVectorElement;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("cannot build a group from an empty generating set")]
    NoGenerators,
    #[error("closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("element set is not closed under the group operation")]
    NotClosed,
    #[error("element set contains no identity")]
    NoIdentity,
    #[error("defining relation {index} does not evaluate to the identity")]
    RelationFails { index: usize },
    #[error("group order is {got}, expected {want}")]
    OrderMismatch { want: usize, got: usize },
    #[error("the claimed subgroup has elements outside the ambient group")]
    NotASubgroup,
}
