use thiserror::Error;

/// Errors reported by the rotation routines.
#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum RotationError {
    /// The requested shift does not satisfy `0 <= shift <= len`.
    #[error("shift {shift} out of range for sequence of length {len}")]
    ShiftOutOfRange { shift: usize, len: usize },

    /// A cycle-leader rotation was asked to rotate by `0` or by the full
    /// length; the permutation has no cycles and the caller must guard.
    #[error("degenerate shift {shift} for sequence of length {len}: no cycles to follow")]
    DegenerateShift { shift: usize, len: usize },

    /// A capacity parameter was zero.
    #[error("invalid configuration: {0}")]
    InvalidConfig(&'static str),
}

pub type Result<T> = std::result::Result<T, RotationError>;
