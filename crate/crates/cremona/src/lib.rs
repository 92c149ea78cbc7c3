//! Exact-arithmetic machinery for verifying finite subgroups of the plane
//! Cremona group over the rationals.
//!
//! Everything here computes over exact scalars (arbitrary-precision rationals
//! and cyclotomic numbers), so every group order, lattice count and canonical
//! form produced by this crate is a proof-grade integer, not a float estimate.
//!
//! Module layout:
//! - [`exactalg`]: scalars (rationals, cyclotomic fields), univariate and
//!   sparse multivariate polynomials, dense matrices.
//! - [`groupkit`]: generic finite-group closure, permutations, product
//!   constructions, presentations.
//! - [`projlin`]: projective linear maps (optionally on weighted projective
//!   space), canonical representatives, lifting lemmas, Minkowski bounds.
//! - [`picard`]: the Picard lattice of a blown-up plane, (-1)-classes and
//!   their intersection graphs.
//! - [`delpezzo`]: point configurations, Del Pezzo surface models, hexagon
//!   (degree-6) automorphisms with Galois twists, parametrized curves.

pub mod delpezzo;
pub mod exactalg;
pub mod groupkit;
pub mod picard;
pub mod projlin;
