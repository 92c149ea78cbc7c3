//! Verification suites for the maximal finite symmetry groups of rational
//! Del Pezzo surfaces and conic bundles.
//!
//! Each suite replays one family of constructions from the `cremona` crate
//! with exact arithmetic — group closures, lattice enumerations, polynomial
//! identities — and records every comparison as a [`report::CheckResult`].
//! The aggregated report reproduces the nine-row maximal-order table
//! (conic bundles 144, dP9 24, dP8 288, dP6 432, dP5 120, dP4 96, dP3 120,
//! dP2 48, dP1 12) with a pass/fail status per row.

pub mod report;
pub mod suites;
