use crate::error::{Result, RotationError};
use crate::ledger::MoveLedger;

/// # Block swap rotation
///
/// The Gries–Mills variant in which the shorter segment is swapped with the
/// *adjacent* block of the same length, so the positions of the shorter
/// segment are filled with the elements that belong there and a rotation
/// problem of the complementary size remains. Tail recursion runs until the
/// shift degenerates.
///
/// Uses exactly `n - gcd(n, k)` swaps for `0 < k < n`.
pub fn rotate_block_swap<T>(seq: &mut [T], k: usize, ledger: &mut MoveLedger) -> Result<()> {
    let n = seq.len();
    if k > n {
        return Err(RotationError::ShiftOutOfRange { shift: k, len: n });
    }

    let mut lo = 0usize;
    let mut hi = n;
    let mut k = k;

    loop {
        let len = hi - lo;
        if k == 0 || k == len {
            return Ok(());
        }
        if k <= len - k {
            // Swap the left segment with the adjacent block to its right;
            // the left k positions become final.
            for i in 0..k {
                seq.swap(lo + i, lo + k + i);
            }
            ledger.swaps(k);
            lo += k;
        } else {
            // Mirror image: swap the right segment with the adjacent block
            // to its left; the last s positions become final.
            let s = len - k;
            for i in 0..s {
                seq.swap(lo + k - s + i, lo + k + i);
            }
            ledger.swaps(s);
            hi -= s;
            k -= s;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::rotate_oracle;

    fn run(n: usize, k: usize) -> (Vec<u32>, MoveLedger) {
        let mut v: Vec<u32> = (0..n as u32).collect();
        let mut ledger = MoveLedger::new();
        rotate_block_swap(&mut v, k, &mut ledger).unwrap();
        (v, ledger)
    }

    #[test]
    fn coprime_pair_swap_count() {
        let (v, ledger) = run(21, 8);
        assert_eq!(v, rotate_oracle(&(0..21).collect::<Vec<_>>(), 8).unwrap());
        assert_eq!(ledger.swap_count, 20); // n - gcd = 21 - 1
        assert_eq!(ledger.type_a_moves, 0);
        assert_eq!(ledger.type_b_moves, 0);
    }

    #[test]
    fn divisor_pair_swap_count() {
        let (_, ledger) = run(6, 3);
        assert_eq!(ledger.swap_count, 3); // 6 - gcd(6, 3)
    }

    #[test]
    fn zero_shift() {
        let (v, ledger) = run(7, 0);
        assert_eq!(v, (0..7).collect::<Vec<_>>());
        assert_eq!(ledger.swap_count, 0);
    }
}
