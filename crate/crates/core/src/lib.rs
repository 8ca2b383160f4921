//! Exact computational algebra around three observations of John McKay:
//! the q-expansion of the modular invariant and its Monster decompositions,
//! the correspondence between finite subgroups of SU(2) and affine A-D-E
//! diagrams, and the equality of p'-degree character counts between a group
//! and the normalizer of its Sylow p-subgroup.
//!
//! The algebraic core is generic over its scalar type (see [`scalar`]); the
//! aliases below fix the concrete instantiations the rest of the crate and
//! the CLI use.

pub mod adequiver;
pub mod chartab;
pub mod error;
pub mod exactnum;
pub mod groups;
pub mod mckaycheck;
pub mod moonshine;
pub mod qseries;
pub mod scalar;
pub mod selfcheck;

pub use error::{Error, Result};
pub use exactnum::{Cyclotomic, Rational};
pub use qseries::{LaurentSeries, QSeries};

/// Matrices over cyclotomic fields, as used by the SU(2) builders.
pub type CyclotomicMatrix = groups::Matrix<Cyclotomic>;
/// Finite groups carrying their exact SU(2) matrices.
pub type Su2Group = groups::MatrixGroup<Cyclotomic>;
