use thiserror::Error;

/// Errors raised by the numerical kernels when an input violates an
/// operation's contract.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix dimension {0} is not one of 2, 4, 8")]
    InvalidDimension(usize),

    #[error("Kronecker product of dimension {0} exceeds the supported maximum of 8")]
    DimensionTooLarge(usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not Hermitian (max |M - M^H| = {0:e})")]
    NotHermitian(f64),

    #[error("invalid subsystem selection: {0}")]
    InvalidSubsystem(String),

    #[error("eigenvalue {0:e} is below the positivity tolerance")]
    NegativeEigenvalue(f64),

    #[error("time must be finite and non-negative, got {0}")]
    InvalidTime(f64),

    #[error("invalid noise parameters: {0}")]
    InvalidNoise(String),

    #[error("purity {0} outside [0, 1]")]
    InvalidPurity(f64),

    #[error("invalid channel parameters: {0}")]
    InvalidChannel(String),

    #[error("channel output is not positive semidefinite (min eigenvalue {0:e})")]
    ChannelContract(f64),

    #[error("invalid trajectory configuration: {0}")]
    InvalidTrajectoryConfig(String),

    #[error("matrix is not an X-state (off-X entry magnitude {0:e})")]
    NotXState(f64),

    #[error("closed-form discord requires b = c (|b - c| = {0:e})")]
    AsymmetricXState(f64),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("not a density matrix: {0}")]
    NotDensityMatrix(String),
}

pub type Result<T> = std::result::Result<T, Error>;
