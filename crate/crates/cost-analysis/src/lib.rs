//! The real-valued cost model of the block cycle rotation.
//!
//! The recurrence [`simple_cost`] φ(ν, κ, β) descends through the Gauss
//! map with geometric speed; its β → 0 limit per element is the series
//! function [`psi`], and `f = ψ + 1` ([`rel_cost`]) is the per-element
//! total cost — a function equal to 1 at the endpoints, peaking at 3 over
//! the golden-ratio argument, continuous at every irrational, and Riemann
//! integrable. Expected costs and moments come from a shifted midpoint
//! rule over `[0, 1/2]` ([`expected_cost`], [`moment`]).
//!
//! Rational arguments `k/n` are evaluated exactly through the integer
//! remainder-sum path ([`psi_exact`], [`rel_cost_exact`]), which ties the
//! continuous model to the instrumented move counts without tolerance.
//!
//! Everything here is pure; evaluation order inside the quadrature is
//! fixed, so outputs are bit-stable run to run.

mod error;
mod maps;
mod params;
mod quadrature;
mod recurrence;
mod series;

pub use error::{CostError, Result};
pub use maps::{gauss_fraction, inside_map, outside_map};
pub use params::{CostParams, SeriesDepthPolicy};
pub use quadrature::{
    expected_cost, moment, peak_argument, sample_points, std_deviation, KahanSum,
};
pub use recurrence::{rel_cost_buffered, simple_cost};
pub use series::{psi, psi_exact, rel_cost, rel_cost_exact, self_similarity_residual};
