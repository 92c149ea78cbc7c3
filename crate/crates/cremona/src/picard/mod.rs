//! Picard-lattice combinatorics for blow-ups of the plane: the intersection
//! pairing on classes `dL - sum m_i E_i`, exhaustive enumeration of
//! (-1)-classes, the special class configurations used for degrees 4 and 5
//! (square-zero pairs summing to the anticanonical class, skew quadruples),
//! and automorphism groups of the resulting incidence structures.
//!
//! All searches run over explicit finite boxes of integer vectors, so every
//! count is the cardinality of a concrete list, not a formula.

mod graph;
mod lattice;

pub use graph::{action_on_quadruples, graph_automorphisms, intersection_graph};
pub use lattice::{
    anticanonical_pairs, enumerate_minus_one, enumerate_minus_one_in_box, skew_quadruples,
    PicClass,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PicardError {
    #[error("rank {0} is outside the supported range 1..=8")]
    RankOutOfRange(usize),
    #[error("classes have ranks {0} and {1}")]
    RankMismatch(usize, usize),
    #[error("graph search supports at most 16 vertices, got {0}")]
    TooManyVertices(usize),
    #[error("adjacency matrix is not square and symmetric")]
    BadAdjacency,
    #[error("permutation degree {got} does not match the {want} listed classes")]
    DegreeMismatch { want: usize, got: usize },
    #[error("permutation does not map the quadruple list to itself")]
    QuadruplesNotPreserved,
}
