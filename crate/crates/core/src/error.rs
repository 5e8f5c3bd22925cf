use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("breakpoints do not form a partition of [0, 1]: {0}")]
    NotPartition(String),
    #[error("step values are not non-increasing at piece {index}: {left} < {right}")]
    NotMonotone { index: usize, left: f64, right: f64 },
    #[error("argument {value} is outside the domain {domain}")]
    OutOfDomain { value: f64, domain: &'static str },
    #[error("step function has a negative value {0}")]
    NegativeValues(f64),
    #[error("element is not invertible (zero singular value)")]
    NotInvertible,
    #[error("piece measures sum to {0}, expected 1")]
    MeasureMismatch(f64),
    #[error("invalid interval set: {0}")]
    InvalidIntervals(String),
    #[error("matrix is not Hermitian (relative defect {0:e})")]
    NotHermitian(f64),
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (residual {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },
    #[error("matrix is numerically singular (sigma_min / sigma_max = {0:e})")]
    Singular(f64),
    #[error("matrix is not positive semidefinite (smallest eigenvalue {0:e})")]
    NotPositive(f64),
    #[error("matrix is not positive invertible (smallest eigenvalue {0:e})")]
    NotPositiveInvertible(f64),
    #[error("operator norm {norm} exceeds the strict-contraction bound 1 - {delta}")]
    NotStrictContraction { norm: f64, delta: f64 },
    #[error("operator norm {0} must exceed 1")]
    NormNotAboveOne(f64),
    #[error("a positive contraction is required (norm {norm}, smallest eigenvalue {min_eig:e})")]
    ContractionRequired { norm: f64, min_eig: f64 },
    #[error("invalid weights: {0}")]
    WeightsInvalid(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("oracle integrand vanishes on the integration set")]
    ZeroOnK,
    #[error("scalar {0} outside [0, 1)")]
    OutOfRange(f64),
    #[error("independent constructions disagree (relative residual {0:e})")]
    ConstructionMismatch(f64),
    #[error("invalid configuration: {0}")]
    ConfigInvalid(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
