//! Dixon's method: the class-sum structure constants act on the vectors
//! `omega_i = |C_i| chi(g_i) / chi(1)` by scalars, so the irreducible
//! characters are read off from common eigenvectors. Everything happens over
//! `F_l` with `l = 1 mod exp(G)`; values are lifted back to cyclotomic
//! integers through the eigenvalue multiplicities on each cyclic subgroup.

use std::cmp::Reverse;

use num_traits::Zero;

use super::modular::PrimeField;
use super::table::CharacterTable;
use crate::error::{Error, Result};
use crate::exactnum::{Cyclotomic, Rational};
use crate::groups::{ConjugacyClasses, FiniteGroup};

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Smallest prime `l = 1 mod exponent` with `l > 2 sqrt(order)`.
pub fn dixon_prime(exponent: u64, order: u64) -> u64 {
    let mut l = exponent + 1;
    while !(is_prime(l) && l * l > 4 * order) {
        l += exponent;
    }
    l
}

fn fail(msg: &str) -> Error {
    Error::CharacterTable(msg.to_string())
}

/// `c[i][j][k]` = number of `x in C_i` with `x^-1 g_k in C_j`.
fn class_constants(group: &FiniteGroup, classes: &ConjugacyClasses) -> Vec<Vec<Vec<u64>>> {
    let r = classes.count();
    let mut c = vec![vec![vec![0u64; r]; r]; r];
    for (k, &g) in classes.representatives.iter().enumerate() {
        for x in 0..group.order() {
            let i = classes.class_of[x];
            let j = classes.class_of[group.mul(group.inv(x), g)];
            c[i][j][k] += 1;
        }
    }
    c
}

/// Splits `F_l^r` into common eigenspaces of the class matrices.
fn common_eigenvectors(field: PrimeField, constants: &[Vec<Vec<u64>>]) -> Result<Vec<Vec<u64>>> {
    let r = constants.len();
    let identity: Vec<Vec<u64>> = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces = vec![identity];
    for m in constants.iter().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut refined = Vec::new();
        for basis in spaces {
            if basis.len() == 1 {
                refined.push(basis);
                continue;
            }
            refined.extend(split(field, m, &basis)?);
        }
        spaces = refined;
    }
    if spaces.len() != r {
        return Err(fail("class matrices do not split into lines"));
    }
    Ok(spaces.into_iter().map(|mut s| s.remove(0)).collect())
}

/// Eigenspaces of `m` (acting on columns) inside the invariant subspace
/// spanned by `basis`.
fn split(field: PrimeField, m: &[Vec<u64>], basis: &[Vec<u64>]) -> Result<Vec<Vec<Vec<u64>>>> {
    let r = m.len();
    let d = basis.len();
    let images: Vec<Vec<u64>> = basis
        .iter()
        .map(|b| {
            (0..r)
                .map(|row| {
                    (0..r).fold(0, |acc, col| field.add(acc, field.mul(m[row][col], b[col])))
                })
                .collect()
        })
        .collect();
    let mut pieces = Vec::new();
    let mut found = 0;
    for lambda in 0..field.l {
        // (M - lambda) B x = 0, as an r x d system
        let system: Vec<Vec<u64>> = (0..r)
            .map(|row| {
                (0..d)
                    .map(|c| field.sub(images[c][row], field.mul(lambda, basis[c][row])))
                    .collect()
            })
            .collect();
        let kernel = field.kernel(&system, d);
        if kernel.is_empty() {
            continue;
        }
        found += kernel.len();
        pieces.push(
            kernel
                .iter()
                .map(|x| {
                    (0..r)
                        .map(|row| {
                            (0..d).fold(0, |acc, c| field.add(acc, field.mul(x[c], basis[c][row])))
                        })
                        .collect()
                })
                .collect(),
        );
        if found == d {
            break;
        }
    }
    if found != d {
        return Err(fail(
            "class matrix is not diagonalizable over the prime field",
        ));
    }
    Ok(pieces)
}

/// The character table of `group`.
pub fn character_table(group: &FiniteGroup) -> Result<CharacterTable> {
    let classes = group.conjugacy_classes();
    let r = classes.count();
    let order = group.order() as u64;
    let exponent = group.exponent();
    let field = PrimeField::new(dixon_prime(exponent, order));
    let constants = class_constants(group, &classes);
    let vectors = common_eigenvectors(field, &constants)?;
    let z = field.root_of_unity(exponent);
    let max_degree = (1..=order)
        .take_while(|d| d * d <= order)
        .last()
        .unwrap_or(1);

    let mut rows = Vec::with_capacity(r);
    for v in vectors {
        if v[0] == 0 {
            return Err(fail("eigenvector vanishes at the identity"));
        }
        let scale = field.inv(v[0]);
        let omega: Vec<u64> = v.iter().map(|&x| field.mul(x, scale)).collect();
        // sum_i omega_i omega_{i*} / |C_i| = |G| / d^2
        let mut s = 0;
        for i in 0..r {
            let term = field.mul(omega[i], omega[classes.inverse_class[i]]);
            s = field.add(s, field.mul(term, field.inv(classes.sizes[i] as u64)));
        }
        if s == 0 {
            return Err(fail("degenerate norm"));
        }
        let d_squared = field.mul(order % field.l, field.inv(s));
        let degree = (1..=max_degree)
            .find(|d| d * d % field.l == d_squared)
            .ok_or_else(|| fail("no degree matches"))?;
        let modular: Vec<u64> = (0..r)
            .map(|i| {
                field.mul(
                    field.mul(degree, omega[i]),
                    field.inv(classes.sizes[i] as u64),
                )
            })
            .collect();
        let row = (0..r)
            .map(|i| lift(field, z, exponent, &classes, &modular, i, degree))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    sort_rows(&mut rows);
    let table = CharacterTable::computed(classes, rows, field.l);
    if !table.rows_orthonormal() {
        return Err(fail("rows are not orthonormal"));
    }
    Ok(table)
}

/// Recovers `chi(g)` for `g` in class `i` from the values of `chi` mod `l`
/// on the powers of `g`.
fn lift(
    field: PrimeField,
    z: u64,
    exponent: u64,
    classes: &ConjugacyClasses,
    modular: &[u64],
    i: usize,
    degree: u64,
) -> Result<Cyclotomic> {
    let o = classes.orders[i] as u64;
    let zo = field.pow(z, exponent / o);
    let o_inv = field.inv(o);
    let mut terms = Vec::new();
    let mut total = 0;
    for k in 0..o {
        let mut m = 0;
        for t in 0..o {
            let value = modular[classes.power_map(i, t as i64)];
            let root = field.pow(zo, (o - k * t % o) % o);
            m = field.add(m, field.mul(value, root));
        }
        let m = field.mul(m, o_inv);
        if m > degree {
            return Err(fail("eigenvalue multiplicity out of range"));
        }
        total += m;
        if m != 0 {
            terms.push((k as i64, Rational::from_integer(m.into())));
        }
    }
    if total != degree {
        return Err(fail(
            "eigenvalue multiplicities do not add up to the degree",
        ));
    }
    Cyclotomic::from_powers(o, terms)
}

/// Degree ascending, then by the complex values of the entries, larger first.
/// The trivial character comes first.
fn sort_rows(rows: &mut [Vec<Cyclotomic>]) {
    let key = |row: &Vec<Cyclotomic>| -> (u64, Vec<Reverse<(i64, i64)>>) {
        let degree = row[0].to_complex().re.round() as u64;
        let values = row
            .iter()
            .map(|x| {
                let c = x.to_complex();
                Reverse(((c.re * 1e9).round() as i64, (c.im * 1e9).round() as i64))
            })
            .collect();
        (degree, values)
    };
    rows.sort_by_cached_key(key);
}

/// Trace of the defining matrices on each class of `classes`.
pub fn character_of_defining_rep(
    group: &FiniteGroup,
    classes: &ConjugacyClasses,
) -> Result<Vec<Cyclotomic>> {
    let traces = group
        .defining_traces()
        .ok_or(Error::NoDefiningRepresentation)?;
    Ok(classes
        .representatives
        .iter()
        .map(|&g| traces[g].clone())
        .collect())
}

/// Classes `g` with `chi(g) = chi(1)`.
pub fn kernel_classes(row: &[Cyclotomic]) -> Vec<usize> {
    (0..row.len())
        .filter(|&c| (&row[c] - &row[0]).is_zero())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_choice() {
        assert_eq!(dixon_prime(60, 120), 61);
        assert_eq!(dixon_prime(1, 1), 3);
        assert_eq!(dixon_prime(12, 24), 13);
        assert_eq!(dixon_prime(1092, 2184), 1093);
    }
}
