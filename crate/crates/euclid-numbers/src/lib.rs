//! Exact integer number theory behind the block cycle cost model:
//! Euclidean traces and remainder sums, continuants, the Heilbronn
//! correspondence between marked continued-fraction expansions and
//! quadruple representations `n = x x' + y y'`, Möbius inversion relating
//! the restricted and unrestricted quadruple sums, and a rigorously
//! bracketed evaluation of the average-cost constant `D = 1 + 4C`.
//!
//! All identity checks run in checked integer arithmetic; the constant is
//! the one place real numbers appear, and there both series are truncated
//! with analytic tail bounds so the reported interval always contains the
//! true value.

mod constant;
mod continuant;
mod error;
mod euclid;
mod heilbronn;
mod mobius;

pub use constant::{constant_c, constant_d, zeta3_bracket, SeriesEstimate};
pub use continuant::{continuant, continuant_matrix, ContinuantWord};
pub use error::{EuclidError, Result};
pub use euclid::{
    avg_cost, avg_remainder_full, euclid_trace, gcd, move_count, remainder_sum, EuclidTrace,
};
pub use heilbronn::{
    big_g, big_g_star, big_g_star_via_mobius, expansion_to_quadruple, heilbronn_expansions,
    heilbronn_identity_check, heilbronn_quadruples, HeilbronnQuadruple,
};
pub use mobius::{divisors, mobius, mobius_sieve};
