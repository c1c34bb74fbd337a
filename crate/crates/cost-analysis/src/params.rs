use crate::error::{CostError, Result};

/// Real-valued arguments of the cost recurrence: array-length scale `nu`,
/// shift scale `kappa` in `[0, nu]`, and buffer scale `beta >= 0`.
///
/// The recurrence is homogeneous of degree one: scaling all three by a
/// positive factor scales the cost by the same factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostParams {
    pub nu: f64,
    pub kappa: f64,
    pub beta: f64,
}

impl CostParams {
    pub fn new(nu: f64, kappa: f64, beta: f64) -> Result<Self> {
        if !(nu.is_finite() && kappa.is_finite() && beta.is_finite()) {
            return Err(CostError::InvalidParams("parameters must be finite"));
        }
        if nu <= 0.0 {
            return Err(CostError::InvalidParams("nu must be positive"));
        }
        if kappa < 0.0 || kappa > nu {
            return Err(CostError::InvalidParams("kappa must lie in [0, nu]"));
        }
        if beta < 0.0 {
            return Err(CostError::InvalidParams("beta must be nonnegative"));
        }
        Ok(Self { nu, kappa, beta })
    }

    pub fn scaled(&self, lambda: f64) -> Self {
        Self {
            nu: self.nu * lambda,
            kappa: self.kappa * lambda,
            beta: self.beta * lambda,
        }
    }
}

/// Truncation control for the series form of the per-element buffer cost.
///
/// The weight of everything beyond depth `d` is at most
/// `sum_{j>d} (2/3)^j = 2 (2/3)^d`, so the depth needed for an absolute
/// tolerance is `log_{3/2}(2 / tol)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesDepthPolicy {
    pub tolerance: f64,
    pub max_depth: u32,
}

impl SeriesDepthPolicy {
    pub fn new(tolerance: f64, max_depth: u32) -> Result<Self> {
        if tolerance.is_nan() || tolerance <= 0.0 {
            return Err(CostError::InvalidParams("tolerance must be positive"));
        }
        Ok(Self {
            tolerance,
            max_depth,
        })
    }

    /// Smallest depth whose geometric tail bound meets the tolerance,
    /// capped at `max_depth`.
    pub fn depth(&self) -> u32 {
        let needed = (2.0 / self.tolerance).ln() / (1.5f64).ln();
        (needed.ceil().max(0.0) as u32).min(self.max_depth)
    }

    /// The tail bound `2 (2/3)^d` actually achieved at the chosen depth.
    pub fn achieved_tail_bound(&self) -> f64 {
        2.0 * (2.0f64 / 3.0).powi(self.depth() as i32)
    }
}

impl Default for SeriesDepthPolicy {
    fn default() -> Self {
        Self {
            tolerance: 1e-9,
            max_depth: 64,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_validation() {
        assert!(CostParams::new(1.0, 0.4, 0.1).is_ok());
        assert!(CostParams::new(0.0, 0.0, 0.1).is_err());
        assert!(CostParams::new(1.0, 1.5, 0.1).is_err());
        assert!(CostParams::new(1.0, 0.5, -0.1).is_err());
    }

    #[test]
    fn default_policy_depth_covers_tolerance() {
        let policy = SeriesDepthPolicy::default();
        let d = policy.depth();
        assert!(d <= 64);
        assert!(policy.achieved_tail_bound() <= policy.tolerance * 1.0001);
    }
}
