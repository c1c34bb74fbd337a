use thiserror::Error;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum EuclidError {
    #[error("shift {k} out of range for modulus {n}")]
    ShiftOutOfRange { n: u64, k: u64 },

    #[error("continuant entries must be positive")]
    NonPositiveEntry,

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("series cutoff must be at least 2, got {0}")]
    CutoffTooSmall(u64),
}

pub type Result<T> = std::result::Result<T, EuclidError>;
