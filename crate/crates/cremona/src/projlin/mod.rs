//! Projective linear maps and the linear-algebra side of the classification:
//! canonical representatives modulo scalars (also on weighted projective
//! spaces), projective element orders, lifts of projective classes to honest
//! matrices (unimodular or form-preserving), companion forms for order-3
//! classes, and the Minkowski multiplicative bound for finite subgroups of
//! `GL_n(Q)`.

mod lifts;
mod minkowski;
mod order3;
mod projmap;

pub use lifts::{coprime_root, lift_form_preserving, lift_to_sl};
pub use minkowski::{minkowski_bound, minkowski_exponent};
pub use order3::{canonical_order3_pgl2, companion_order3_pgl3, cyclic_conjugator, WhichLift};
pub use projmap::ProjMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProjError {
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("weight list has length {got}, matrix has size {want}")]
    WeightCountMismatch { want: usize, got: usize },
    #[error("the minimal coordinate weight must be 1")]
    MinWeightNotOne,
    #[error("matrix entry ({i},{j}) connects coordinates of different weights")]
    MixesWeights { i: usize, j: usize },
    #[error("projective order exceeds the cap {cap}")]
    OrderCapExceeded { cap: u32 },
    #[error("the {r}-th power is not a scalar matrix")]
    PowerNotScalar { r: u32 },
    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: u32, b: u32 },
    #[error("incompatible power data: a^m != b^n")]
    IncompatiblePowers,
    #[error("projective order is {got}, expected {want}")]
    WrongOrder { want: u32, got: u32 },
    #[error("no cyclic vector found")]
    NoCyclicVector,
    #[error("the map does not preserve the form up to a scalar")]
    NotInvariant,
    #[error("cannot take a root: {0}")]
    RootObstruction(String),
}
