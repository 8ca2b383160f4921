//! Published character tables, transcribed entry by entry with their class
//! sizes as the header row.

use num_traits::One;

use super::table::CharacterTable;
use crate::exactnum::Cyclotomic;

/// Entry symbols: integers, `p`/`-p` for `phi = (1 + sqrt 5)/2`, `q`/`-q`
/// for `phi' = (1 - sqrt 5)/2`, `w`/`w2` (optionally negated) for
/// `omega_3` and `omega_3^2`.
fn entry(symbol: &str) -> Cyclotomic {
    let (negative, body) = match symbol.strip_prefix('-') {
        Some(rest) if !rest.chars().all(|c| c.is_ascii_digit()) => (true, rest),
        _ => (false, symbol),
    };
    let z5 = |k| Cyclotomic::root_of_unity(5, k);
    let value = match body {
        // phi = 1 + z5 + z5^4
        "p" => &(&Cyclotomic::one() + &z5(1)) + &z5(4),
        // phi' = 1 - phi
        "q" => &(&Cyclotomic::one() + &z5(2)) + &z5(3),
        "w" => Cyclotomic::root_of_unity(3, 1),
        "w2" => Cyclotomic::root_of_unity(3, 2),
        n => Cyclotomic::from_integer(n.parse().expect("integer entry")),
    };
    if negative {
        -value
    } else {
        value
    }
}

fn parse(sizes: &[usize], rows: &[&str]) -> CharacterTable {
    let entries = rows
        .iter()
        .map(|row| row.split_whitespace().map(entry).collect())
        .collect();
    CharacterTable::from_entries(sizes.to_vec(), entries)
}

/// The binary icosahedral group, order 120.
pub fn binary_icosahedral_table() -> CharacterTable {
    parse(
        &[1, 12, 12, 20, 30, 20, 12, 1, 12],
        &[
            "1  1  1  1  1  1  1  1  1",
            "2 -q -p  1  0 -1  q -2  p",
            "2 -p -q  1  0 -1  p -2  q",
            "3  p  q  0 -1  0  p  3  q",
            "3  q  p  0 -1  0  q  3  p",
            "4 -1 -1  1  0  1 -1  4 -1",
            "4 -1 -1 -1  0  1  1 -4  1",
            "5  0  0 -1  1 -1  0  5  0",
            "6  1  1  0  0  0 -1 -6 -1",
        ],
    )
}

/// The binary tetrahedral group `SL(2, 3)`, order 24.
pub fn binary_tetrahedral_table() -> CharacterTable {
    parse(
        &[1, 4, 4, 6, 1, 4, 4],
        &[
            "1   1   1   1  1   1   1",
            "1  w2  w2   1  1   w   w",
            "1   w   w   1  1  w2  w2",
            "2  -1   1   0 -2   1  -1",
            "2  -w   w   0 -2  w2 -w2",
            "2 -w2  w2   0 -2   w  -w",
            "3   0   0  -1  3   0   0",
        ],
    )
}
