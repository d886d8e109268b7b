use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: String, got: String },

    #[error("matrix dimension {rows}x{cols} exceeds the 4x4 limit")]
    TooLarge { rows: usize, cols: usize },

    #[error("matrix is not Hermitian (max deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("trace is {trace:.12}, expected 1")]
    TraceNotOne { trace: f64 },

    #[error("matrix is not positive semidefinite (smallest eigenvalue {min_eigenvalue:.3e})")]
    NotPositive { min_eigenvalue: f64 },

    #[error("non-finite matrix entry")]
    NonFinite,

    #[error("Bloch vector length {norm} exceeds 1")]
    OutsideBlochBall { norm: f64 },

    #[error("invalid probability distribution: {0}")]
    InvalidDistribution(String),

    #[error("evolution time must be non-negative, got {0}")]
    NegativeTime(f64),

    #[error("integration step {dt} exceeds the maximum {max}")]
    StepTooLarge { dt: f64, max: f64 },

    #[error("invalid rank {0}, expected 1..=4")]
    InvalidRank(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("state file: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
