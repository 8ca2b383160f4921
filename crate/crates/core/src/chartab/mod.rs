//! Character tables by Dixon's method over a prime field, with exact
//! orthogonality checks and equivalence up to row and column permutation.

mod dixon;
mod modular;
mod reference;
mod table;

pub use dixon::{character_of_defining_rep, character_table, dixon_prime, kernel_classes};
pub use reference::{binary_icosahedral_table, binary_tetrahedral_table};
pub use table::{table_equivalent, CharacterTable};
