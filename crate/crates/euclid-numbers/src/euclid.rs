use crate::error::{EuclidError, Result};

/// Quotients and remainders of one run of the Euclidean algorithm.
///
/// With `r0 = n` and `r1 = k`, the run performs
/// `r_{j-1} = q_j * r_j + r_{j+1}` until the remainder vanishes.
/// `remainders` holds `r1, r2, ...` down to the final nonzero remainder
/// (the gcd); `quotients` holds the matching `q_j`. For `k = 0` both lists
/// are empty and the gcd is `n` by convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclidTrace {
    pub remainders: Vec<u64>,
    pub quotients: Vec<u64>,
}

impl EuclidTrace {
    /// The final nonzero remainder; `fallback_n` is returned for the empty
    /// trace of `k = 0`.
    pub fn gcd(&self, fallback_n: u64) -> u64 {
        self.remainders.last().copied().unwrap_or(fallback_n)
    }

    /// Sum of all nonzero remainders.
    pub fn remainder_sum(&self) -> u64 {
        self.remainders.iter().sum()
    }
}

/// Runs the Euclidean algorithm on `(n, k)` and records the full trace.
pub fn euclid_trace(n: u64, k: u64) -> Result<EuclidTrace> {
    if k > n {
        return Err(EuclidError::ShiftOutOfRange { n, k });
    }
    let mut remainders = Vec::new();
    let mut quotients = Vec::new();
    let (mut a, mut b) = (n, k);
    while b != 0 {
        remainders.push(b);
        quotients.push(a / b);
        let r = a % b;
        a = b;
        b = r;
    }
    Ok(EuclidTrace {
        remainders,
        quotients,
    })
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The remainder sum M̄(n, k): all nonzero remainders of the Euclidean run
/// started at `(n, k)`, the final gcd included. M̄(n, 0) = 0 and
/// M̄(n, n) = n.
pub fn remainder_sum(n: u64, k: u64) -> u64 {
    debug_assert!(k <= n);
    let (mut a, mut b) = (n, k);
    let mut sum = 0u64;
    while b != 0 {
        sum += b;
        let r = a % b;
        a = b;
        b = r;
    }
    sum
}

/// The move count M(n, k) of the unbuffered block cycle rotation:
/// `n - gcd(n, k) + 2 * M̄(n, min(k, n - k))`. Zero at both degenerate
/// shifts, symmetric under `k -> n - k`.
pub fn move_count(n: u64, k: u64) -> u64 {
    debug_assert!(k <= n);
    if k == 0 || k == n {
        return 0;
    }
    n - gcd(n, k) + 2 * remainder_sum(n, k.min(n - k))
}

/// The average move count A(n) = (1/n) * sum of M(n, k) over 0 <= k < n,
/// accumulated in integers. Returns the exact numerator together with the
/// real quotient; `A(n) / n` approaches the average-cost constant.
pub fn avg_cost(n: u64) -> (u128, f64) {
    let mut total: u128 = 0;
    for k in 0..n {
        total += move_count(n, k) as u128;
    }
    (total, total as f64 / n as f64)
}

/// The remainder sum averaged over the full shift range
/// `1 <= k <= n`: exact numerator and real quotient of
/// (1/n) * sum of M̄(n, k).
pub fn avg_remainder_full(n: u64) -> (u128, f64) {
    let mut total: u128 = 0;
    for k in 1..=n {
        total += remainder_sum(n, k) as u128;
    }
    (total, total as f64 / n as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trace_21_8() {
        let t = euclid_trace(21, 8).unwrap();
        assert_eq!(t.remainders, vec![8, 5, 3, 2, 1]);
        assert_eq!(t.quotients, vec![2, 1, 1, 1, 2]);
        assert_eq!(t.gcd(21), 1);
    }

    #[test]
    fn trace_unit_shift() {
        let t = euclid_trace(13, 1).unwrap();
        assert_eq!(t.remainders, vec![1]);
        assert_eq!(t.quotients, vec![13]);
    }

    #[test]
    fn trace_divisor_shift() {
        let t = euclid_trace(6, 3).unwrap();
        assert_eq!(t.remainders, vec![3]);
    }

    #[test]
    fn trace_zero_shift_is_empty() {
        let t = euclid_trace(9, 0).unwrap();
        assert!(t.remainders.is_empty());
        assert_eq!(t.gcd(9), 9);
        assert_eq!(t.remainder_sum(), 0);
    }

    #[test]
    fn trace_recurrence_invariant() {
        for n in 1..=120u64 {
            for k in 0..=n {
                let t = euclid_trace(n, k).unwrap();
                let mut prev = n;
                for (j, (&r, &q)) in t.remainders.iter().zip(&t.quotients).enumerate() {
                    let next = t.remainders.get(j + 1).copied().unwrap_or(0);
                    assert_eq!(prev, q * r + next, "step {j} of ({n},{k})");
                    assert!(next < r);
                    prev = r;
                }
                assert_eq!(t.gcd(n), gcd(n, k));
                assert_eq!(t.remainder_sum(), remainder_sum(n, k));
                if t.quotients.len() > 1 {
                    assert!(*t.quotients.last().unwrap() >= 2, "final quotient of ({n},{k})");
                }
            }
        }
    }

    #[test]
    fn remainder_sum_examples() {
        assert_eq!(remainder_sum(21, 8), 19);
        assert_eq!(remainder_sum(100, 1), 1);
        assert_eq!(remainder_sum(13, 8), 19);
        // k >= n/2 reflection: first remainder k, then the (n, n-k) run.
        assert_eq!(remainder_sum(13, 8), 8 + remainder_sum(13, 5));
        assert_eq!(remainder_sum(7, 7), 7);
    }

    #[test]
    fn move_count_examples() {
        assert_eq!(move_count(21, 8), 58);
        assert_eq!(move_count(2, 1), 3);
        assert_eq!(move_count(9, 0), 0);
        assert_eq!(move_count(9, 9), 0);
        assert_eq!(move_count(34, 13), 97);
    }

    #[test]
    fn avg_cost_small() {
        assert_eq!(avg_cost(1), (0, 0.0));
        let (num, a2) = avg_cost(2);
        assert_eq!(num, 3); // M(2,0) + M(2,1)
        assert!((a2 - 1.5).abs() < 1e-12);
    }

    #[test]
    fn avg_remainder_small() {
        let (num, avg) = avg_remainder_full(2);
        assert_eq!(num, 3); // M̄(2,1) + M̄(2,2) = 1 + 2
        assert!((avg - 1.5).abs() < 1e-12);
        assert_eq!(avg_remainder_full(1).0, 1); // M̄(1,1)
    }
}
