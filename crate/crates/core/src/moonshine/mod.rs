//! Monster degrees, decompositions of `j` coefficients into them, the order
//! of the Monster, and sums of squared coefficients mod 70.

mod decompose;
mod dims;
mod numerics;

pub use decompose::{
    enumerate_decompositions, verify_decomposition, Decomposition, MAX_SEARCH_BOUND,
};
pub use dims::{
    load_irrep_dims, parse_irrep_dims, DimsSpec, IrrepDims, BUNDLED_MONSTER_DIMS, MONSTER_ANCHORS,
    MONSTER_IRREP_COUNT,
};
pub use numerics::{
    evaluate_factorization, j_coefficient, matches_monster_order, meaning_of_life,
    monster_order_check, window_coefficients, CoefficientSource, CoefficientWindow,
    MONSTER_FACTORIZATION, MONSTER_ORDER,
};
