use crate::error::{CostError, Result};
use crate::maps::{inside_map, outside_map};
use crate::params::SeriesDepthPolicy;
use crate::quadrature::KahanSum;

/// The limit per-element buffer cost ψ on `[0, 1/2]`, by its uniformly
/// convergent series
///
/// ```text
/// ψ(x) = 2x + 2 Σ_{j>=1} T(x) T(I x) ··· T(I^{j-1} x) · I^j x
/// ```
///
/// truncated once the geometric weight bound guarantees the policy
/// tolerance.
///
/// ψ jumps at every rational, and the float iteration cannot be trusted to
/// stay on the correct side of a jump: one rounding in the Gauss map is
/// enough to land the orbit on the wrong branch. Arguments that are exact
/// rationals with denominator up to 2^31 — every such value a caller can
/// even pass in an `f64` — are therefore routed through the integer
/// remainder-sum path; only genuinely non-representable points go through
/// the series.
pub fn psi(x: f64, policy: &SeriesDepthPolicy) -> f64 {
    debug_assert!(
        (0.0..=0.5 + 1e-12).contains(&x),
        "psi argument {x} outside [0, 1/2]"
    );
    if x == 0.0 {
        return 0.0;
    }
    const DENOM: u64 = 1 << 31;
    let scaled = x * DENOM as f64;
    if scaled.fract() == 0.0 {
        // psi is scaling-blind in (k, n), so the unreduced pair is fine
        return psi_exact(scaled as u64, DENOM).expect("argument checked in range");
    }
    let mut sum = KahanSum::new();
    sum.add(2.0 * x);
    let mut weight = 1.0f64;
    let mut cur = x;
    for _ in 0..policy.depth() {
        weight *= outside_map(cur);
        cur = inside_map(cur);
        if cur == 0.0 || weight == 0.0 {
            break;
        }
        sum.add(2.0 * weight * cur);
        // everything still to come is below 2 * weight
        if 2.0 * weight <= policy.tolerance {
            break;
        }
    }
    sum.value()
}

/// The per-element total cost `f(x) = ψ(min(x, 1-x)) + 1` on `[0, 1]`.
/// Continuous at every irrational argument, `1 <= f <= 3`, symmetric
/// about 1/2.
pub fn rel_cost(x: f64, policy: &SeriesDepthPolicy) -> f64 {
    debug_assert!((0.0..=1.0).contains(&x), "rel_cost argument {x}");
    psi(x.min(1.0 - x), policy) + 1.0
}

/// ψ at the rational `k/n`, through the exact integer path:
/// `ψ(k/n) = 2 M̄(n, k) / n` for `k <= n/2`, reflected otherwise.
pub fn psi_exact(k: u64, n: u64) -> Result<f64> {
    if n == 0 || k > n {
        return Err(CostError::Domain("psi_exact needs 0 <= k <= n, n > 0"));
    }
    let short = k.min(n - k);
    Ok(2.0 * euclid_numbers::remainder_sum(n, short) as f64 / n as f64)
}

/// `f` at the rational `k/n` through the exact integer path; satisfies
/// `n * f(k/n) - gcd(n, k) = M(n, k)` exactly in integers.
pub fn rel_cost_exact(k: u64, n: u64) -> Result<f64> {
    Ok(psi_exact(k, n)? + 1.0)
}

/// Residual of the self-similarity law at branch `m`:
///
/// ```text
/// f(y) - [ (m+2) y - (m+2) + (m+1-my) f( (1-y) / (m+1-my) ) ]
/// ```
///
/// The mapped argument must land in `(1/(m+2), 1/(m+1))`, which is
/// exactly the image of `y in (0, 1/2)`.
pub fn self_similarity_residual(y: f64, m: u32, policy: &SeriesDepthPolicy) -> Result<f64> {
    if m < 2 {
        return Err(CostError::Domain("branch index m must be at least 2"));
    }
    if !(y > 0.0 && y < 0.5) {
        return Err(CostError::Domain("y must lie in (0, 1/2)"));
    }
    let m_f = m as f64;
    let mapped = (1.0 - y) / (m_f + 1.0 - m_f * y);
    if !(mapped > 1.0 / (m_f + 2.0) && mapped < 1.0 / (m_f + 1.0)) {
        return Err(CostError::Domain(
            "mapped argument left (1/(m+2), 1/(m+1))",
        ));
    }
    let lhs = rel_cost(y, policy);
    let rhs = (m_f + 2.0) * y - (m_f + 2.0) + (m_f + 1.0 - m_f * y) * rel_cost(mapped, policy);
    Ok(lhs - rhs)
}
