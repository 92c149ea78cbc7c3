//! Concrete surface models and the geometric verifications built on them:
//! point configurations in the plane and the projectivities permuting them,
//! the degree-6 standard surface in P^2 x P^2 with its torus, hexagon
//! symmetries and Galois-semilinear maps, weighted-projective hypersurfaces
//! with curve containment and disjointness checks, and the named models that
//! feed the report generator.

mod hexaut;
mod models;
mod points;
mod surfaces;

pub use hexaut::{
    character_matrix, galois_twist_6, hexagon_group, semilinear_commutes, torus_centralizer,
    HexAut,
};
pub use models::{
    clebsch_cubic, dp1_model, dp2_double_cover, dp4_blowup_group, dp4_point_config,
    fermat_cubic, ClebschModel, Dp1Model, Dp2Model, FermatModel, SexticGrouping,
};
pub use points::{
    collinear, general_position, realizable_point_permutations, six_on_conic,
    unique_projectivity, PointConfig,
};
pub use surfaces::{
    curves_disjoint, dp1_stabilizer_check, form_invariant_under, surface_contains_curve,
    weighted_aut_group, ParamCurve, WeightedHypersurface,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DelPezzoError {
    #[error("points must be nonzero vectors of length 3")]
    BadPoint,
    #[error("two of the points coincide projectively")]
    CoincidentPoints,
    #[error("expected {want} points, got {got}")]
    WrongPointCount { want: usize, got: usize },
    #[error("point configuration is degenerate")]
    DegenerateConfiguration,
    #[error("elements live over different moduli: {0} and {1}")]
    ModulusMismatch(u32, u32),
    #[error("modulus {0} is outside the supported range 2..=18")]
    ModulusOutOfRange(u32),
    #[error("exponent {k} is not invertible modulo {n}")]
    ExponentNotInvertible { k: u32, n: u32 },
    #[error("expected a linear element (k = 1) and a twisted one (k != 1)")]
    NotSemilinearPair,
    #[error("ambient weights do not match")]
    WeightMismatch,
    #[error("defining polynomial is not weighted-homogeneous")]
    NotWeightedHomogeneous,
    #[error("parametrized curve is ill-formed: {0}")]
    IllFormedCurve(String),
    #[error("disjointness is undecided for this pair of curves: {0}")]
    DisjointnessUndecided(String),
    #[error("generator {index} does not preserve the surface")]
    GeneratorBreaksSurface { index: usize },
    #[error("matrix is not invertible")]
    SingularMatrix,
    #[error("algebra error: {0}")]
    Algebra(#[from] crate::exactalg::ExactError),
    #[error("projective map error: {0}")]
    Projective(#[from] crate::projlin::ProjError),
    #[error("group construction failed: {0}")]
    Group(#[from] crate::groupkit::GroupError),
}
