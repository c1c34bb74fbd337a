use crate::error::{Result, RotationError};

/// Exact move counters filled in by the instrumented rotation routines.
///
/// Three kinds of events are tallied separately so that either the raw
/// counts or the move-equivalent total can be recovered:
///
/// * `type_a_moves` — element copies into or out of auxiliary storage
///   (a buffer cell, a batch buffer, or the early-exit buffer);
/// * `type_b_moves` — element copies within the array itself;
/// * `swap_count` — element exchanges performed by swap-based algorithms.
///
/// A swap is three move-equivalents (tmp = a; a = b; b = tmp), so the
/// comparable cost of a run is `type_a + type_b + 3 * swaps`.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct MoveLedger {
    pub type_a_moves: u64,
    pub type_b_moves: u64,
    pub swap_count: u64,
}

impl MoveLedger {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn clear(&mut self) {
        *self = Self::default();
    }

    /// Move-equivalent total: buffer moves plus in-array moves plus three
    /// per swap.
    pub fn total_moves(&self) -> u64 {
        self.type_a_moves + self.type_b_moves + 3 * self.swap_count
    }

    pub(crate) fn buffer_moves(&mut self, count: usize) {
        self.type_a_moves += count as u64;
    }

    pub(crate) fn array_moves(&mut self, count: usize) {
        self.type_b_moves += count as u64;
    }

    pub(crate) fn swaps(&mut self, count: usize) {
        self.swap_count += count as u64;
    }
}

/// Tuning knobs for the block cycle algorithm.
///
/// `early_exit_capacity` ends the recursion as soon as the shorter segment
/// fits into the buffer; `batch_capacity` moves runs of adjacent elements
/// through the buffer during the cycle phase. Both capacities are in
/// elements and must be at least 1. With both at 1 the algorithm
/// degenerates to the unbatched single-cell-buffer scheme whose counts the
/// cost model describes exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockCycleConfig {
    early_exit_capacity: usize,
    batch_capacity: usize,
}

impl BlockCycleConfig {
    /// Single-cell buffer, no batching. Matches the unbuffered cost model.
    pub const UNIT: Self = Self {
        early_exit_capacity: 1,
        batch_capacity: 1,
    };

    pub fn new(early_exit_capacity: usize, batch_capacity: usize) -> Result<Self> {
        if early_exit_capacity == 0 {
            return Err(RotationError::InvalidConfig(
                "early_exit_capacity must be at least 1",
            ));
        }
        if batch_capacity == 0 {
            return Err(RotationError::InvalidConfig(
                "batch_capacity must be at least 1",
            ));
        }
        Ok(Self {
            early_exit_capacity,
            batch_capacity,
        })
    }

    pub fn early_exit_capacity(&self) -> usize {
        self.early_exit_capacity
    }

    pub fn batch_capacity(&self) -> usize {
        self.batch_capacity
    }
}

impl Default for BlockCycleConfig {
    fn default() -> Self {
        Self::UNIT
    }
}

/// An owned rotation instance: a sequence together with a validated left
/// shift. Mostly a convenience for harness code that carries cases around.
#[derive(Debug, Clone)]
pub struct RotationProblem<T> {
    seq: Vec<T>,
    shift: usize,
}

impl<T> RotationProblem<T> {
    pub fn new(seq: Vec<T>, shift: usize) -> Result<Self> {
        if shift > seq.len() {
            return Err(RotationError::ShiftOutOfRange {
                shift,
                len: seq.len(),
            });
        }
        Ok(Self { seq, shift })
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn seq(&self) -> &[T] {
        &self.seq
    }

    pub fn seq_mut(&mut self) -> &mut [T] {
        &mut self.seq
    }

    pub fn into_seq(self) -> Vec<T> {
        self.seq
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn total_counts_swaps_as_three_moves() {
        let ledger = MoveLedger {
            type_a_moves: 4,
            type_b_moves: 5,
            swap_count: 2,
        };
        assert_eq!(ledger.total_moves(), 15);
    }

    #[test]
    fn config_rejects_zero_capacities() {
        assert!(BlockCycleConfig::new(0, 1).is_err());
        assert!(BlockCycleConfig::new(1, 0).is_err());
        assert_eq!(BlockCycleConfig::new(1, 1).unwrap(), BlockCycleConfig::UNIT);
    }

    #[test]
    fn problem_validates_shift() {
        assert!(RotationProblem::new(vec![1, 2, 3], 4).is_err());
        let p = RotationProblem::new(vec![1, 2, 3], 3).unwrap();
        assert_eq!(p.shift(), 3);
    }
}
