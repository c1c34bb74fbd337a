use crate::error::{EuclidError, Result};
use crate::mobius::mobius_sieve;

/// Compensated (Kahan) accumulator; the series below add hundreds of
/// thousands of small terms and plain summation would shed digits.
#[derive(Debug, Default, Clone, Copy)]
struct Kahan {
    sum: f64,
    carry: f64,
}

impl Kahan {
    fn add(&mut self, x: f64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum
    }
}

/// A rigorous two-sided enclosure of the average-cost constant C.
///
/// `lower` truncates the positive double series over coprime pairs, so it
/// can only grow with the cutoff; `upper` truncates the subtracted series
/// of the complementary form, so it can only shrink. The true constant
/// lies between the two at every cutoff.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesEstimate {
    pub lower: f64,
    pub upper: f64,
    pub terms: u64,
}

impl SeriesEstimate {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lower + self.upper)
    }
}

/// Apery's constant ζ(3) as a two-sided bracket: direct summation to a
/// fixed cutoff plus the integral tail bound
/// `1/(2(S+1)^2) < sum_{s>S} s^{-3} < 1/(2 S^2)`. The bracket width is
/// about 1e-13.
pub fn zeta3_bracket() -> (f64, f64) {
    const CUT: u64 = 200_000;
    let mut sum = Kahan::default();
    // ascending magnitudes: sum small terms first
    for s in (1..=CUT).rev() {
        let x = s as f64;
        sum.add(1.0 / (x * x * x));
    }
    let s = CUT as f64;
    (
        sum.value() + 0.5 / ((s + 1.0) * (s + 1.0)),
        sum.value() + 0.5 / (s * s),
    )
}

/// Lower estimate: the positive series over coprime pairs `x > y >= 1`
/// with terms `(2x + y) / (2 x^2 (x + y)^2)`.
///
/// Summed naively the pair count is quadratic in the cutoff, so the inner
/// sum over `x` is folded first: for fixed `y`,
/// `sum_x (1/x^2 - 1/(x+y)^2)` telescopes against the zeta tail and the
/// coprimality filter unfolds over the divisors of `y` by Moebius. What is
/// accumulated per `y` is therefore exact (every omitted contribution is a
/// whole positive `y`-slice), and monotonicity in the cutoff is preserved.
fn lower_estimate(cutoff: u64) -> f64 {
    let y_max = cutoff as usize;
    // w[m] = sum_{s=m+1}^{2m} 1/s^2  (the telescoped inner sum)
    let mut w = vec![0.0f64; y_max + 1];
    if y_max >= 1 {
        w[1] = 0.25;
    }
    for m in 1..y_max {
        let a = (2 * m + 1) as f64;
        let b = (2 * m + 2) as f64;
        let c = (m + 1) as f64;
        w[m + 1] = w[m] + 1.0 / (a * a) + 1.0 / (b * b) - 1.0 / (c * c);
    }

    let mu = mobius_sieve(y_max);
    let mut total = Kahan::default();
    for d in 1..=y_max {
        if mu[d] == 0 {
            continue;
        }
        let sign = mu[d] as f64;
        let d2 = (d * d) as f64;
        for m in 1..=y_max / d {
            let y = (d * m) as f64;
            total.add(sign * w[m] / (2.0 * y * d2));
        }
    }
    total.value()
}

/// Upper estimate: `C = 1/2 - S / (2 ζ(3))` with
/// `S = sum_{x > y >= 1} 1/(y (x+y)^2)`. Any truncation of `S` from below
/// yields an upper bound for C.
///
/// Substituting `s = x + y` gives `S = sum_y (1/y) T(2y)` with
/// `T(S) = sum_{s > S} s^{-2}`; the tails `T` are carried as exact
/// suffix sums seeded by the bound `1/(S+1) < T(S) < 1/S`, and the
/// truncated range `y > cutoff` is boxed the same way.
fn upper_estimate(cutoff: u64) -> f64 {
    let y_max = cutoff;
    // T(2 y_max) bracket seed; only the lower end matters for an upper
    // bound on C, but both are tracked for the record.
    let mut t_lo = 1.0 / (2.0 * y_max as f64 + 1.0);
    let mut s_lo = Kahan::default();
    for y in (1..=y_max).rev() {
        s_lo.add(t_lo / y as f64);
        // extend the tail downward: T(2(y-1)) = T(2y) + two exact terms
        let a = (2 * y - 1) as f64;
        let b = (2 * y) as f64;
        t_lo += 1.0 / (a * a) + 1.0 / (b * b);
    }
    // tail over y > cutoff: sum (1/y) T(2y) > sum 1/(2 y (y + 1)) which
    // telescopes to 1/(2 (cutoff + 1))
    let tail_lo = 0.5 / (y_max as f64 + 1.0);
    let s_lower_bound = s_lo.value() + tail_lo;

    let (_z_lo, z_hi) = zeta3_bracket();
    0.5 - s_lower_bound / (2.0 * z_hi)
}

/// Two-sided estimate of the constant C at the given cutoff.
pub fn constant_c(cutoff: u64) -> Result<SeriesEstimate> {
    if cutoff < 2 {
        return Err(EuclidError::CutoffTooSmall(cutoff));
    }
    let lower = lower_estimate(cutoff);
    let upper = upper_estimate(cutoff);
    Ok(SeriesEstimate {
        lower,
        upper,
        terms: cutoff,
    })
}

/// The average-cost constant D = 1 + 4C as a bracket.
pub fn constant_d(cutoff: u64) -> Result<(f64, f64)> {
    let c = constant_c(cutoff)?;
    Ok((1.0 + 4.0 * c.lower, 1.0 + 4.0 * c.upper))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta3_is_apery() {
        let (lo, hi) = zeta3_bracket();
        assert!(lo <= hi);
        assert!(hi - lo < 1e-10);
        // reference digits: 1.2020569031595942...
        assert!((lo - 1.202_056_903_159_594_2).abs() < 1e-9);
    }

    #[test]
    fn cutoff_must_be_at_least_two() {
        assert_eq!(constant_c(1), Err(EuclidError::CutoffTooSmall(1)));
    }

    #[test]
    fn bracket_contains_single_term_bound() {
        // the single (x, y) = (2, 1) term alone is 5/72
        let est = constant_c(2).unwrap();
        assert!(est.lower >= 5.0 / 72.0);
        assert!(est.lower <= est.upper);
    }

    #[test]
    fn brackets_nest_and_shrink() {
        let cuts = [2u64, 4, 16, 64, 256, 1024, 4096];
        let mut prev = constant_c(cuts[0]).unwrap();
        for &x in &cuts[1..] {
            let est = constant_c(x).unwrap();
            assert!(est.lower >= prev.lower, "lower monotone at {x}");
            assert!(est.upper <= prev.upper, "upper monotone at {x}");
            assert!(est.lower <= est.upper, "ordering at {x}");
            prev = est;
        }
    }

    #[test]
    fn d_lands_near_its_known_value() {
        let (lo, hi) = constant_d(100_000).unwrap();
        assert!(lo <= hi);
        assert!(hi - lo <= 1e-3, "width {}", hi - lo);
        assert!(lo > 1.84 && hi < 1.86, "bracket [{lo}, {hi}]");
    }
}
