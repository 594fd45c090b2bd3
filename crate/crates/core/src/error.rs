use thiserror::Error;

/// Errors produced by the geometry, closed-form, energy, direction and
/// optimizer layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid dimension: n = {n} (expected {expected})")]
    InvalidDimension { n: i64, expected: &'static str },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("vector must have at least one coordinate")]
    EmptyVector,

    #[error("coordinate {index} is not finite")]
    NonFinite { index: usize },

    #[error("point set must contain at least one point")]
    EmptyPointSet,

    #[error("direction is not unit: |u|^2 = {norm_squared}")]
    NotUnit { norm_squared: f64 },

    #[error("direction is not orthogonal to the all-ones vector: <u, 1> = {sum}")]
    NotSumZero { sum: f64 },

    #[error("t = {t} out of range 1..={n}")]
    TOutOfRange { n: usize, t: usize },

    #[error("invalid low set: {0}")]
    InvalidLowSet(String),

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("enumeration limited to n <= {cap}, got n = {n}")]
    EnumerationCap { n: usize, cap: usize },

    #[error("grid oracle supports search dimension <= 3, got {0}")]
    OracleScope(usize),

    #[error("grid resolution must be at least 8, got {0}")]
    GridResolution(usize),

    #[error("invalid optimizer configuration: {0}")]
    InvalidConfig(String),

    #[error("sum-zero constraint leaves no directions in dimension 1")]
    EmptyConstraintSpace,
}

pub type Result<T> = std::result::Result<T, Error>;
