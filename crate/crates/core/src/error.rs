use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("regularity r = {regularity} outside [1, p-2] for degree p = {degree}")]
    InvalidRegularity { degree: usize, regularity: isize },

    #[error("invalid breakpoints: {0}")]
    InvalidBreakpoints(String),

    #[error("multiplicity {multiplicity} is invalid for degree {degree}")]
    InvalidMultiplicity { multiplicity: usize, degree: usize },

    #[error("breakpoint index {index} out of range 1..={count}")]
    BreakpointIndex { index: usize, count: usize },

    #[error("inserting at breakpoint {index} would raise its multiplicity to {multiplicity} > degree {degree}")]
    MultiplicityOverflow { index: usize, multiplicity: usize, degree: usize },

    #[error("parameter {0} lies outside [0, 1]")]
    OutOfDomain(f64),

    #[error("expected {expected} coefficients, got {got}")]
    CoefficientCount { expected: usize, got: usize },

    #[error("blossom of degree {expected} called with {got} arguments")]
    Arity { expected: usize, got: usize },

    #[error("target knot vector is not a refinement of the source")]
    NotRefinement,

    #[error("operation needs degree >= 1")]
    DegreeZero,

    #[error("spline spaces have different breakpoints")]
    MismatchedBreakpoints,

    #[error("spaces are incompatible: {0}")]
    IncompatibleSpaces(String),

    #[error("interface control points differ at column {column} by {distance:e}")]
    InterfaceMismatch { column: usize, distance: f64 },

    #[error("geometry is not analysis-suitable G1: {0}")]
    NotAsG1(String),

    #[error("no linear beta pair satisfies beta = aL*bR - aR*bL (residual {0:e})")]
    InfeasibleBetaSplit(f64),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("jacobian of patch {patch} is singular or changes sign near (u, v) = ({u}, {v})")]
    SingularJacobian { patch: char, u: f64, v: f64 },

    #[error("rank-deficient system: rank {rank} < {columns}")]
    RankDeficient { rank: usize, columns: usize },

    #[error("singular system: {0}")]
    Singular(String),

    #[error("inconsistent constraints (residual {0:e})")]
    InconsistentConstraints(f64),

    #[error("pair (g0, g1) does not define a C1 function (residual {0:e})")]
    MembershipViolation(f64),

    #[error("case not covered by the closed-form matrices: {0}")]
    UnsupportedCase(String),

    #[error("supplied gluing data inconsistent with geometry (relative residual {0:e})")]
    GluingResidual(f64),

    #[error("schema error in field `{field}`: {message}")]
    Schema { field: String, message: String },

    #[error("{0}")]
    Io(String),
}
