use crate::error::{Result, RotationError};
use crate::ledger::{BlockCycleConfig, MoveLedger};

/// # Block cycle rotation
///
/// Rotates `seq` left by `k` places in place, tallying every element move
/// into `ledger`.
///
/// The window starts as the whole array with a left segment of length `k`.
/// Each step cycles `q = floor(len / short)` blocks of the shorter segment's
/// length one block position towards that segment, which parks
/// `(q - 1) * short` elements finally at the cost of `(q + 1) * short`
/// moves, and leaves a rotation of length `short + len % short`. When the
/// shorter segment is the right one the same step runs mirrored, so a shift
/// beyond the midpoint is handled by the genuine right-rotation recursion
/// rather than by pre-normalizing `k`.
///
/// ```text
///   k = 2, n = 9, q = 4:
/// [ a  b: c  d  e  f  g  h  i ]
///   └──┴╮ ╭──╮ ╭──╮ ╭───────── cycle of q blocks, through the buffer
/// [ c  d  e  f  g  h  a  b: i ]
///                    └─────┴── remaining window, shorter side right
/// ```
///
/// The recursion ends early once the shorter segment fits into
/// `config.early_exit_capacity`: segment out to the buffer, the long side
/// shifted over, segment back in, `len + short` moves. Batching groups the
/// buffer traffic of the cycle phase into runs of up to
/// `config.batch_capacity` adjacent elements; it changes access patterns
/// only, never counts.
///
/// With a unit config the ledger satisfies, exactly:
/// `type_a = 2 * (sum of Euclidean remainders of (n, min(k, n - k)))` and
/// `type_b = n - gcd(n, k)`.
pub fn rotate_block_cycle<T: Copy>(
    seq: &mut [T],
    k: usize,
    config: &BlockCycleConfig,
    ledger: &mut MoveLedger,
) -> Result<()> {
    let n = seq.len();
    if k > n {
        return Err(RotationError::ShiftOutOfRange { shift: k, len: n });
    }

    let mut lo = 0usize;
    let mut hi = n;
    // Length of the left segment inside the current window [lo, hi).
    let mut k = k;

    let early = config.early_exit_capacity();
    let batch = config.batch_capacity();
    let mut buf: Vec<T> = Vec::new();

    loop {
        let len = hi - lo;
        if k == 0 || k == len {
            return Ok(());
        }
        let short = k.min(len - k);

        if short <= early {
            early_exit(seq, lo, hi, k, &mut buf, ledger);
            return Ok(());
        }

        if k * 2 == len {
            // Equal segments: swap the halves directly. Each exchange runs
            // through the buffer cell (2 buffer moves + 1 in-array move),
            // which lands on the same counts as a final cycle step with
            // q = 2 and remainder 0.
            for i in 0..k {
                seq.swap(lo + i, lo + k + i);
            }
            ledger.buffer_moves(2 * k);
            ledger.array_moves(k);
            return Ok(());
        }

        if k < len - k {
            // Shorter side left: cycle q blocks of length k one position
            // leftwards; the first block's content surfaces in the last
            // block position.
            let q = len / k;
            let mut off = 0;
            while off < k {
                let b = batch.min(k - off);
                buf.clear();
                buf.extend_from_slice(&seq[lo + off..lo + off + b]);
                ledger.buffer_moves(b);
                for j in 0..q - 1 {
                    let dst = lo + j * k + off;
                    seq.copy_within(dst + k..dst + k + b, dst);
                }
                ledger.array_moves((q - 1) * b);
                let last = lo + (q - 1) * k + off;
                seq[last..last + b].copy_from_slice(&buf);
                ledger.buffer_moves(b);
                off += b;
            }
            lo += (q - 1) * k;
            // Window is now k + len % k long with the old first block at its
            // head; the left-shift amount stays k.
        } else {
            // Shorter side right: the mirrored step. Blocks of length
            // s = len - k counted from the right edge cycle one position
            // rightwards; the last block's content surfaces in the
            // leftmost block position.
            let s = len - k;
            let q = len / s;
            let r = len % s;
            let mut off = 0;
            while off < s {
                let b = batch.min(s - off);
                buf.clear();
                buf.extend_from_slice(&seq[hi - s + off..hi - s + off + b]);
                ledger.buffer_moves(b);
                for j in 0..q - 1 {
                    let dst = hi - (j + 1) * s + off;
                    seq.copy_within(dst - s..dst - s + b, dst);
                }
                ledger.array_moves((q - 1) * b);
                let first = hi - q * s + off;
                seq[first..first + b].copy_from_slice(&buf);
                ledger.buffer_moves(b);
                off += b;
            }
            hi -= (q - 1) * s;
            // Remaining window needs a left rotation by the remainder.
            k = r;
        }
    }
}

/// Terminal phase: shorter segment to the buffer, long segment shifted
/// over, buffer drained into the freed range. `len + short` moves.
fn early_exit<T: Copy>(
    seq: &mut [T],
    lo: usize,
    hi: usize,
    k: usize,
    buf: &mut Vec<T>,
    ledger: &mut MoveLedger,
) {
    let len = hi - lo;
    if k <= len - k {
        buf.clear();
        buf.extend_from_slice(&seq[lo..lo + k]);
        ledger.buffer_moves(k);
        seq.copy_within(lo + k..hi, lo);
        ledger.array_moves(len - k);
        seq[hi - k..hi].copy_from_slice(buf);
        ledger.buffer_moves(k);
    } else {
        let s = len - k;
        buf.clear();
        buf.extend_from_slice(&seq[hi - s..hi]);
        ledger.buffer_moves(s);
        seq.copy_within(lo..lo + k, lo + s);
        ledger.array_moves(k);
        seq[lo..lo + s].copy_from_slice(buf);
        ledger.buffer_moves(s);
    }
}
