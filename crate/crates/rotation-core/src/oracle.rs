use crate::error::{Result, RotationError};

/// Out-of-place reference rotation.
///
/// Returns a fresh copy in which the element at source index `i` lands at
/// index `(i - k) mod n`; the input is untouched. Every in-place algorithm
/// in this crate is tested against this function.
pub fn rotate_oracle<T: Clone>(seq: &[T], k: usize) -> Result<Vec<T>> {
    let n = seq.len();
    if k > n {
        return Err(RotationError::ShiftOutOfRange { shift: k, len: n });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&seq[k..]);
    out.extend_from_slice(&seq[..k]);
    Ok(out)
}
