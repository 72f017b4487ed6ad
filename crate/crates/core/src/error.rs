use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("symplectic vector has odd length {0}")]
    OddLength(usize),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("index {index} out of range for size {size}")]
    OutOfRange { index: usize, size: usize },

    #[error("unsupported transform length {0} (expected 2 or 4)")]
    UnsupportedLength(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("probability {0} outside [0, 1]")]
    Probability(f64),

    #[error("code construction failed: {0}")]
    Construction(String),

    #[error("decoder incompatible with code: {0}")]
    Incompatible(String),

    #[error("instance too large for exhaustive enumeration: {0} configurations")]
    TooLarge(u128),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
