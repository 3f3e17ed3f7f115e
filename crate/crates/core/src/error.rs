use crate::algebra::Var;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("no value supplied for variable {0}")]
    UnassignedVariable(Var),
    #[error("duplicate sample point {0}")]
    DuplicateSample(i64),
    #[error("interpolation needs at least {needed} samples, got {got}")]
    InsufficientSamples { needed: usize, got: usize },
    #[error("interpolated coefficient of degree {degree} is not an integer: {coeff}")]
    NonIntegralCoefficient { degree: usize, coeff: String },
    #[error("interpolant disagrees with sample at {point}: expected {expected}, got {got}")]
    InterpolationResidual { point: i64, expected: String, got: String },
    #[error("edge id {edge} out of range for a graph with {count} edges")]
    InvalidEdge { edge: usize, count: usize },
    #[error("vertex id {vertex} out of range for a graph with {count} vertices")]
    InvalidVertex { vertex: usize, count: usize },
    #[error("loop edge {0} has a single orientation and cannot be flipped")]
    LoopFlip(usize),
    #[error("orientation has {got} entries but the graph has {expected} edges")]
    OrientationMismatch { expected: usize, got: usize },
    #[error("graph has {0} edges; at most 64 are supported")]
    TooManyEdges(usize),
    #[error("size guard exceeded for {what}: {needed} > {limit}")]
    SizeGuard { what: String, needed: u128, limit: u128 },
    #[error("constraint sets overlap on edges {0:?}")]
    InconsistentConstraints(Vec<usize>),
    #[error("modulus must be at least 1, got {0}")]
    InvalidModulus(i64),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("routes disagree for {what}: {detail}")]
    RouteDisagreement { what: String, detail: String },
    #[error("pieces {0} and {1} of a claimed disjoint decomposition overlap")]
    OverlappingPieces(usize, usize),
    #[error("ambient group is empty")]
    EmptyAmbient,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
