//! In-place rotation algorithms over random-access sequences, each
//! instrumented with exact move accounting.
//!
//! Rotating left by `k` sends the element at index `i` to
//! `(i - k) mod n`. Five algorithms are provided, all verified against the
//! out-of-place [`rotate_oracle`]:
//!
//! * [`rotate_block_cycle`] — cyclic block permutations with an early-exit
//!   buffer and batched buffer traffic; the subject of the cost model in
//!   `cost-analysis`;
//! * [`rotate_block_swap`] — Gries–Mills-style adjacent block swapping,
//!   `n - gcd(n, k)` swaps;
//! * [`rotate_triple_reverse`] — three reversals, about `3n/2` swaps;
//! * [`rotate_trinity`] — conjoined triple reversal, at most `2n + 8`
//!   move-equivalents;
//! * [`rotate_dolphin`] — cycle-leader rotation, exactly `n + gcd(n, k)`
//!   moves.
//!
//! Every routine mutates only the sequence and ledger it is handed; there
//! is no global state. Rotating disjoint sequences concurrently is safe, a
//! single sequence must not be rotated from two threads.

mod block_cycle;
mod block_swap;
mod dolphin;
mod error;
mod ledger;
mod oracle;
mod reversal;

pub use block_cycle::rotate_block_cycle;
pub use block_swap::rotate_block_swap;
pub use dolphin::rotate_dolphin;
pub use error::{Result, RotationError};
pub use ledger::{BlockCycleConfig, MoveLedger, RotationProblem};
pub use oracle::rotate_oracle;
pub use reversal::{rotate_triple_reverse, rotate_trinity};
