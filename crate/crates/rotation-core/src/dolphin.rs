use crate::error::{Result, RotationError};
use crate::ledger::MoveLedger;

/// # Dolphin (cycle-leader) rotation
///
/// Follows the `gcd(n, k)` cycles of the rotation permutation, draining
/// each through one temporary cell. A cycle of length `m` costs `m + 1`
/// moves, so the whole rotation costs exactly `n + gcd(n, k)` moves — the
/// optimum; no rotation algorithm does better.
///
/// `k = 0` and `k = n` have no cycles to follow and are rejected; callers
/// must guard the degenerate shifts.
pub fn rotate_dolphin<T: Copy>(seq: &mut [T], k: usize, ledger: &mut MoveLedger) -> Result<()> {
    let n = seq.len();
    if k > n {
        return Err(RotationError::ShiftOutOfRange { shift: k, len: n });
    }
    if k == 0 || k == n {
        return Err(RotationError::DegenerateShift { shift: k, len: n });
    }

    let cycles = gcd(n, k);
    for start in 0..cycles {
        let tmp = seq[start];
        ledger.buffer_moves(1);
        let mut i = start;
        loop {
            let j = if i + k < n { i + k } else { i + k - n };
            if j == start {
                break;
            }
            seq[i] = seq[j];
            ledger.array_moves(1);
            i = j;
        }
        seq[i] = tmp;
        ledger.buffer_moves(1);
    }
    Ok(())
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::rotate_oracle;

    fn run(n: usize, k: usize) -> (Vec<u32>, MoveLedger) {
        let mut v: Vec<u32> = (0..n as u32).collect();
        let mut ledger = MoveLedger::new();
        rotate_dolphin(&mut v, k, &mut ledger).unwrap();
        (v, ledger)
    }

    #[test]
    fn coprime_pair_is_one_cycle() {
        let (v, ledger) = run(21, 8);
        assert_eq!(v, rotate_oracle(&(0..21).collect::<Vec<_>>(), 8).unwrap());
        assert_eq!(ledger.total_moves(), 22); // n + gcd
    }

    #[test]
    fn two_cycles_of_length_three() {
        let (v, ledger) = run(6, 2);
        assert_eq!(v, rotate_oracle(&(0..6).collect::<Vec<_>>(), 2).unwrap());
        assert_eq!(ledger.total_moves(), 8); // 6 + gcd(6, 2)
        assert_eq!(ledger.type_a_moves, 4); // two temp round-trips
    }

    #[test]
    fn single_transposition_through_buffer() {
        let (v, ledger) = run(2, 1);
        assert_eq!(v, vec![1, 0]);
        assert_eq!(ledger.total_moves(), 3);
    }

    #[test]
    fn degenerate_shifts_are_errors() {
        let mut v = vec![1, 2, 3];
        let mut ledger = MoveLedger::new();
        assert_eq!(
            rotate_dolphin(&mut v, 0, &mut ledger),
            Err(RotationError::DegenerateShift { shift: 0, len: 3 })
        );
        assert_eq!(
            rotate_dolphin(&mut v, 3, &mut ledger),
            Err(RotationError::DegenerateShift { shift: 3, len: 3 })
        );
        assert_eq!(
            rotate_dolphin(&mut v, 5, &mut ledger),
            Err(RotationError::ShiftOutOfRange { shift: 5, len: 3 })
        );
    }
}
