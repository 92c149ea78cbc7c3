//! Exact scalar arithmetic and polynomial plumbing.
//!
//! The scalar domain is either `Rational` (arbitrary-precision, always
//! reduced, positive denominator — backed by `num_rational::BigRational`) or
//! [`Cyclotomic`], an element of Q(zeta_n) stored as a residue modulo the
//! n-th cyclotomic polynomial. Both implement the [`Field`] trait, which is
//! what the matrix, polynomial and projective-map code is generic over.

mod cyclotomic;
mod field;
mod matrix;
mod multipoly;
mod numbers;
mod unipoly;

pub use cyclotomic::{
    cyclotomic_polynomial, cyclotomic_reduce, euler_phi, Cyclotomic, GaloisMap,
};
pub use field::Field;
pub use matrix::Matrix;
pub use multipoly::{binary_form_common_root, MultiPoly, VarTable};
pub use numbers::{
    cubic_discriminant, frac, has_rational_root, rat, rational_cube_root, rational_nth_root,
    sextic_reducibility_criterion,
};
pub use unipoly::UniPoly;

/// Exact rational number: arbitrary-precision, reduced, denominator > 0.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("exponent {k} is not invertible modulo {n}")]
    ExponentNotCoprime { n: u32, k: u32 },
    #[error("conductor {have} does not embed in conductor {want}")]
    ConductorMismatch { have: u32, want: u32 },
    #[error("expected a monic polynomial of degree {want}, got degree {got:?}")]
    WrongDegree { want: usize, got: Option<usize> },
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("zero is not a valid input here")]
    ZeroInput,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("polynomials are built over different variable tables")]
    TableMismatch,
    #[error("matrix dimension {got} does not match variable count {want}")]
    DimensionMismatch { want: usize, got: usize },
    #[error("linear substitution mixes variables of different weights")]
    WeightMixing,
    #[error("expected a nonzero homogeneous binary form")]
    NotBinaryForm,
}
