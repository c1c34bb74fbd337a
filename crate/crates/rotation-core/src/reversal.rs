use crate::error::{Result, RotationError};
use crate::ledger::{BlockCycleConfig, MoveLedger};

/// # Triple reversal rotation
///
/// Reverse the left segment, reverse the right segment, reverse the whole
/// array. Uses `floor(k/2) + floor((n-k)/2) + floor(n/2)` swaps.
pub fn rotate_triple_reverse<T>(seq: &mut [T], k: usize, ledger: &mut MoveLedger) -> Result<()> {
    let n = seq.len();
    if k > n {
        return Err(RotationError::ShiftOutOfRange { shift: k, len: n });
    }
    if k == 0 || k == n {
        return Ok(());
    }
    reverse_range(seq, 0, k, ledger);
    reverse_range(seq, k, n, ledger);
    reverse_range(seq, 0, n, ledger);
    Ok(())
}

fn reverse_range<T>(seq: &mut [T], mut lo: usize, mut hi: usize, ledger: &mut MoveLedger) {
    let mut swaps = 0;
    while lo + 1 < hi {
        hi -= 1;
        seq.swap(lo, hi);
        lo += 1;
        swaps += 1;
    }
    ledger.swaps(swaps);
}

/// # Trinity rotation (conjoined triple reversal)
///
/// The three reversals of the triple reversal are conjoined: the head and
/// tail transpositions of the passes are regrouped into 4-cycles driven
/// through one temporary cell, so most elements are written once instead
/// of twice.
///
/// Four cursors walk inwards — `ls`/`le` over the left segment, `rs`/`re`
/// over the right one:
///
/// ```text
///   ls-->            <--le|rs-->          <--re
/// [ 1  2  3  4  5  6  7: 8* a  b  c  d  e  f  g]
/// ```
///
/// While both segments have a pair left, one 4-cycle
/// `ls -> le -> re -> rs -> ls` finalizes the outermost two positions for
/// five moves. The leftover of the longer segment is drained by 3-cycles
/// (four moves each), and whatever remains between the cursors is one
/// plain reversal. Totals stay within `2n + 8` move-equivalents.
///
/// When the shorter segment fits into `config.early_exit_capacity` the
/// buffered path is taken instead: segment out, long side shifted over,
/// segment back in (`n + short` moves).
pub fn rotate_trinity<T: Copy>(
    seq: &mut [T],
    k: usize,
    config: &BlockCycleConfig,
    ledger: &mut MoveLedger,
) -> Result<()> {
    let n = seq.len();
    if k > n {
        return Err(RotationError::ShiftOutOfRange { shift: k, len: n });
    }
    if k == 0 || k == n {
        return Ok(());
    }

    let left = k;
    let right = n - k;
    let short = left.min(right);

    if short <= config.early_exit_capacity() {
        let mut buf: Vec<T> = Vec::with_capacity(short);
        if left <= right {
            buf.extend_from_slice(&seq[..left]);
            ledger.buffer_moves(left);
            seq.copy_within(left.., 0);
            ledger.array_moves(right);
            seq[right..].copy_from_slice(&buf);
            ledger.buffer_moves(left);
        } else {
            buf.extend_from_slice(&seq[left..]);
            ledger.buffer_moves(right);
            seq.copy_within(..left, right);
            ledger.array_moves(left);
            seq[..right].copy_from_slice(&buf);
            ledger.buffer_moves(right);
        }
        return Ok(());
    }

    if left == right {
        for i in 0..left {
            seq.swap(i, left + i);
        }
        ledger.swaps(left);
        return Ok(());
    }

    let mut ls = 0;
    let mut le = left - 1;
    let mut rs = left;
    let mut re = n - 1;

    let half_min = short / 2;
    let half_max = left.max(right) / 2;

    for _ in 0..half_min {
        // (ls -> le -> re -> rs -> ls)
        let tmp = seq[rs];
        seq[rs] = seq[re];
        seq[re] = seq[le];
        seq[le] = seq[ls];
        seq[ls] = tmp;
        ledger.buffer_moves(2);
        ledger.array_moves(3);
        ls += 1;
        le -= 1;
        rs += 1;
        re -= 1;
    }

    if left > right {
        for _ in 0..half_max - half_min {
            // (ls -> le -> re -> ls)
            let tmp = seq[re];
            seq[re] = seq[le];
            seq[le] = seq[ls];
            seq[ls] = tmp;
            ledger.buffer_moves(2);
            ledger.array_moves(2);
            ls += 1;
            le -= 1;
            re -= 1;
        }
    } else {
        for _ in 0..half_max - half_min {
            // (ls -> re -> rs -> ls)
            let tmp = seq[rs];
            seq[rs] = seq[re];
            seq[re] = seq[ls];
            seq[ls] = tmp;
            ledger.buffer_moves(2);
            ledger.array_moves(2);
            ls += 1;
            rs += 1;
            re -= 1;
        }
    }

    reverse_range(seq, ls, re + 1, ledger);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::rotate_oracle;

    fn markers(n: usize) -> Vec<u32> {
        (0..n as u32).collect()
    }

    #[test]
    fn triple_reverse_swap_count() {
        let mut v = markers(21);
        let mut ledger = MoveLedger::new();
        rotate_triple_reverse(&mut v, 8, &mut ledger).unwrap();
        assert_eq!(v, rotate_oracle(&markers(21), 8).unwrap());
        assert_eq!(ledger.swap_count, 4 + 6 + 10);
    }

    #[test]
    fn triple_reverse_single_exchange() {
        let mut v = markers(2);
        let mut ledger = MoveLedger::new();
        rotate_triple_reverse(&mut v, 1, &mut ledger).unwrap();
        assert_eq!(v, vec![1, 0]);
        assert_eq!(ledger.swap_count, 1);
    }

    #[test]
    fn triple_reverse_guards_degenerate() {
        let mut v = markers(4);
        let mut ledger = MoveLedger::new();
        rotate_triple_reverse(&mut v, 0, &mut ledger).unwrap();
        assert_eq!(v, markers(4));
        assert_eq!(ledger.swap_count, 0);
    }

    #[test]
    fn trinity_matches_oracle_and_bound() {
        let mut v = markers(64);
        let mut ledger = MoveLedger::new();
        rotate_trinity(&mut v, 17, &BlockCycleConfig::UNIT, &mut ledger).unwrap();
        assert_eq!(v, rotate_oracle(&markers(64), 17).unwrap());
        assert!(ledger.total_moves() <= 2 * 64 + 8);
    }

    #[test]
    fn trinity_zero_shift() {
        let mut v = markers(5);
        let mut ledger = MoveLedger::new();
        rotate_trinity(&mut v, 0, &BlockCycleConfig::UNIT, &mut ledger).unwrap();
        assert_eq!(v, markers(5));
        assert_eq!(ledger.total_moves(), 0);
    }

    #[test]
    fn trinity_all_small_cases() {
        for n in 0..=48usize {
            for k in 0..=n {
                let mut v = markers(n);
                let mut ledger = MoveLedger::new();
                rotate_trinity(&mut v, k, &BlockCycleConfig::UNIT, &mut ledger).unwrap();
                assert_eq!(v, rotate_oracle(&markers(n), k).unwrap(), "n={n} k={k}");
                assert!(
                    ledger.total_moves() <= 2 * n as u64 + 8,
                    "n={n} k={k} total={}",
                    ledger.total_moves()
                );
            }
        }
    }
}
