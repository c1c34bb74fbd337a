/// Fractional part `{x} = x - floor(x)` for nonnegative `x`.
pub fn gauss_fraction(x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    x - x.floor()
}

/// The inner iteration map `I(x) = {1/x} / (1 + {1/x})`, with `I(0) = 0`.
/// Maps `[0, 1/2]` into itself.
pub fn inside_map(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let g = gauss_fraction(1.0 / x);
    g / (1.0 + g)
}

/// The weight map `T(x) = x (1 + {1/x})`, with `T(0) = 0`. Bounded by 2/3
/// on `[0, 1/2]`, which is what makes the cost series geometric.
pub fn outside_map(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    x * (1.0 + gauss_fraction(1.0 / x))
}
