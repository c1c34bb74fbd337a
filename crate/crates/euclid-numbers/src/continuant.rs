use crate::error::{EuclidError, Result};

/// A finite word of positive integers evaluated as a continuant:
/// the empty word is 1, a single entry is itself, and
/// `<a0, ..., at> = a0 * <a1, ..., at> + <a2, ..., at>`.
///
/// Continuants are the numerators of continued fractions; the remainders
/// of a Euclidean run are the continuants of the quotient-word suffixes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuantWord {
    entries: Vec<u64>,
}

impl ContinuantWord {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.contains(&0) {
            return Err(EuclidError::NonPositiveEntry);
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn value(&self) -> Result<u64> {
        continuant(&self.entries)
    }
}

/// Evaluates `<entries>` by the three-term recurrence, right to left.
pub fn continuant(entries: &[u64]) -> Result<u64> {
    if entries.contains(&0) {
        return Err(EuclidError::NonPositiveEntry);
    }
    // (value of the suffix, value of the suffix minus its head)
    let mut cur: u64 = 1;
    let mut prev: u64 = 0;
    for &a in entries.iter().rev() {
        let next = a
            .checked_mul(cur)
            .and_then(|p| p.checked_add(prev))
            .ok_or(EuclidError::Overflow("continuant"))?;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Top-left entry of the product of the matrices `[[a, 1], [1, 0]]`;
/// agrees with [`continuant`] and serves as its cross-check.
pub fn continuant_matrix(entries: &[u64]) -> Result<u64> {
    if entries.contains(&0) {
        return Err(EuclidError::NonPositiveEntry);
    }
    // Row-vector state: matrix product accumulated on the left.
    let (mut m00, mut m01, mut m10, mut m11) = (1u64, 0u64, 0u64, 1u64);
    for &a in entries {
        let mul = |x: u64, y: u64| -> Result<u64> {
            x.checked_mul(y).ok_or(EuclidError::Overflow("continuant matrix"))
        };
        let add = |x: u64, y: u64| -> Result<u64> {
            x.checked_add(y).ok_or(EuclidError::Overflow("continuant matrix"))
        };
        let n00 = add(mul(m00, a)?, m01)?;
        let n01 = m00;
        let n10 = add(mul(m10, a)?, m11)?;
        let n11 = m10;
        (m00, m01, m10, m11) = (n00, n01, n10, n11);
    }
    Ok(m00)
}
