use crate::error::{CostError, Result};
use crate::params::SeriesDepthPolicy;
use crate::recurrence::rel_cost_buffered;
use crate::series::rel_cost;

/// Compensated summation; the quadratures below fold millions of terms
/// and must not drift past the acceptance tolerances.
#[derive(Debug, Default, Clone, Copy)]
pub struct KahanSum {
    sum: f64,
    carry: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum
    }
}

/// The argument of the cost curve's peak, `(3 - sqrt 5) / 2` — one minus
/// the golden ratio's fractional part.
pub fn peak_argument() -> f64 {
    (3.0 - 5.0f64.sqrt()) / 2.0
}

/// Sample grid on `(0, 1/2)`: `samples` equispaced points shifted by the
/// golden-ratio fraction `frac(peak / step)` of the step. The shift is
/// irrational, so no sample ever lands on a rational (every point sits a
/// quadratic-irrationality gap away from each p/q), and the comb passes
/// through the peak argument itself.
pub fn sample_points(samples: usize) -> impl Iterator<Item = f64> + Clone {
    let h = 0.5 / samples as f64;
    let offset = (peak_argument() / h).fract();
    (0..samples).map(move |i| (i as f64 + offset) * h)
}

/// Expected per-element cost at buffer scale `beta`:
/// `2 * integral of f_beta over [0, 1/2]` by the shifted midpoint rule.
///
/// For `beta >= 1/2` the shorter segment always fits into the buffer, the
/// curve is exactly `1 + x`, and the integral is returned in closed form:
/// 1.25.
pub fn expected_cost(beta: f64, samples: usize) -> Result<f64> {
    if beta.is_nan() || beta <= 0.0 || beta > 1.0 {
        return Err(CostError::Domain("beta must lie in (0, 1]"));
    }
    if samples == 0 {
        return Err(CostError::Domain("at least one sample required"));
    }
    if beta >= 0.5 {
        return Ok(1.25);
    }
    let h = 0.5 / samples as f64;
    let mut acc = KahanSum::new();
    for x in sample_points(samples) {
        acc.add(rel_cost_buffered(x, beta)?);
    }
    Ok(2.0 * acc.value() * h)
}

/// The `order`-th moment `E[f(X)^order]` for `X` uniform on `[0, 1/2]`,
/// by the same shifted midpoint rule on the limit curve.
pub fn moment(order: u32, samples: usize, policy: &SeriesDepthPolicy) -> Result<f64> {
    if samples == 0 {
        return Err(CostError::Domain("at least one sample required"));
    }
    let h = 0.5 / samples as f64;
    let mut acc = KahanSum::new();
    for x in sample_points(samples) {
        acc.add(rel_cost(x, policy).powi(order as i32));
    }
    Ok(2.0 * acc.value() * h)
}

/// Standard deviation of `f(X)` from the first two moments.
pub fn std_deviation(samples: usize, policy: &SeriesDepthPolicy) -> Result<f64> {
    let m1 = moment(1, samples, policy)?;
    let m2 = moment(2, samples, policy)?;
    Ok((m2 - m1 * m1).max(0.0).sqrt())
}
