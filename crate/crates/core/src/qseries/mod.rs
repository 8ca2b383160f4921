//! Truncated Laurent series and the classical q-expansions built on them.

mod laurent;
mod modular;

pub use laurent::LaurentSeries;
pub use modular::{
    bernoulli, cube_root_of_q_j, discriminant, divisor_sigma_table, eisenstein, j_invariant,
    ramanujan_tau, Evaluation, QSeries,
};
