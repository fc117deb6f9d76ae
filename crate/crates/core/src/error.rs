use thiserror::Error;

/// Errors from parsing textual input (partitions, rationals).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid rational `{0}`")]
    Rational(String),
    #[error("invalid partition `{0}`: expected comma-separated positive integers")]
    Partition(String),
    #[error("partition parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("size mismatch: partitions of {left} and {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("invalid set partition of [{n}]: {reason}")]
    InvalidSetPartition { n: usize, reason: String },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("partition type must equal λ′: expected {expected}, got {actual}")]
    TypeMismatch { expected: String, actual: String },

    #[error("hyperplane index {index} out of range for an arrangement of {len}")]
    InvalidIndex { index: usize, len: usize },

    #[error("invalid hyperplane: {0}")]
    InvalidHyperplane(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("double-point check requires k > 1 (got k = {0})")]
    HookRequiresK(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
