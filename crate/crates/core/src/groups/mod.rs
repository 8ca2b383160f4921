//! Finite groups from exact matrix generators: closure, conjugacy classes,
//! Sylow subgroups and normalizers.

mod builders;
mod finite;
mod matrix;
mod presentation;

pub use builders::{
    build_named_group, build_named_group_with_cap, check_named_presentation, group_by_name, sl2,
    standard_assignment, su2_generators, su2_group, GroupName, SL2_PRIMES,
};
pub use finite::{
    is_quaternion8, ConjugacyClasses, FiniteGroup, MatrixGroup, Subgroup, DEFAULT_SIZE_CAP,
};
pub use matrix::Matrix;
pub use presentation::{evaluate_word, verify_presentation};
