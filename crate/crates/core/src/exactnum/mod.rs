//! Exact arithmetic: reduced rationals and elements of cyclotomic fields.

mod cyclotomic;
mod poly;
mod rational;

pub use cyclotomic::Cyclotomic;
pub use poly::{cyclotomic_polynomial, euler_phi, prime_factors};
pub use rational::{parse_rational, render_rational, Rational};
