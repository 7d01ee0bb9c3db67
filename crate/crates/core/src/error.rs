use thiserror::Error;

use crate::lattice::Point;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("points must have at least one coordinate")]
    ZeroDimension,
    #[error("coordinate {0} is negative")]
    NegativeCoordinate(i64),
    #[error("coordinate {0} exceeds the supported bound {max}", max = crate::lattice::MAX_COORD)]
    CoordinateTooLarge(i64),
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("every input point is zero")]
    AllZero,
    #[error("zero is not allowed here: {0}")]
    ZeroPoint(&'static str),
    #[error("the cone is not simplicial")]
    UnsupportedCone,
    #[error("invalid ray {ray:?}: {reason}")]
    InvalidRay { ray: Point, reason: &'static str },
    #[error("invalid grading: {0}")]
    InvalidGrading(&'static str),
    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),
    #[error("the monomial order is not degree-compatible")]
    NotDegreeCompatible,
    #[error("point {0:?} is not in the cone")]
    NotInCone(Point),
    #[error("point {0:?} is not in the semigroup")]
    NotInSemigroup(Point),
    #[error("not a C-semigroup: {0}")]
    NotCSemigroup(String),
    #[error("exploration budget of grade {0} exhausted before a certificate was found")]
    BudgetExceeded(u64),
    #[error("the gap set is empty, so the Frobenius element is undefined")]
    EmptyGaps,
    #[error("the semigroup does not meet extremal ray {0}")]
    RayNotMet(usize),
    #[error("the given elements do not pick exactly one non-zero point on every extremal ray")]
    NotOnRays,
    #[error("invalid gap set: {0}")]
    InvalidGapSet(String),
    #[error("the two semigroups live in different cones")]
    ConeMismatch,
    #[error("search cap of {0} exceeded")]
    CapExceeded(u64),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("max genus {max_genus} is below the genus {genus} of the root")]
    GenusBelowRoot { max_genus: usize, genus: usize },
    #[error("only dimension 2 is supported here, got {0}")]
    UnsupportedDimension(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::ZeroDimension => "zero_dimension",
            Error::NegativeCoordinate(_) => "negative_coordinate",
            Error::CoordinateTooLarge(_) => "coordinate_too_large",
            Error::EmptyInput(_) => "empty_input",
            Error::AllZero => "all_zero",
            Error::ZeroPoint(_) => "zero_point",
            Error::UnsupportedCone => "unsupported_cone",
            Error::InvalidRay { .. } => "invalid_ray",
            Error::InvalidGrading(_) => "invalid_grading",
            Error::InvalidOrder(_) => "invalid_order",
            Error::NotDegreeCompatible => "not_degree_compatible",
            Error::NotInCone(_) => "not_in_cone",
            Error::NotInSemigroup(_) => "not_in_semigroup",
            Error::NotCSemigroup(_) => "not_c_semigroup",
            Error::BudgetExceeded(_) => "budget_exceeded",
            Error::EmptyGaps => "empty_gaps",
            Error::RayNotMet(_) => "ray_not_met",
            Error::NotOnRays => "m_not_on_rays",
            Error::InvalidGapSet(_) => "invalid_gap_set",
            Error::ConeMismatch => "cone_mismatch",
            Error::CapExceeded(_) => "cap_exceeded",
            Error::TooLarge(_) => "too_large",
            Error::GenusBelowRoot { .. } => "genus_below_root",
            Error::UnsupportedDimension(_) => "unsupported_dimension",
            Error::Parse(_) => "parse",
        }
    }

    /// Errors that mean "inconclusive within the configured limits" rather
    /// than invalid input.
    pub fn is_inconclusive(&self) -> bool {
        matches!(self, Error::BudgetExceeded(_) | Error::CapExceeded(_) | Error::TooLarge(_))
    }
}
