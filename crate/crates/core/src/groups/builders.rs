//! Named finite groups from exact matrix generators.
//!
//! The SU(2) groups use the embedding of unit quaternions
//! `a + bi + cj + dk -> [[a + bi, c + di], [-c + di, a - bi]]`, so the
//! generator matrices double as the defining two-dimensional representation.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use super::finite::{is_prime, FiniteGroup, MatrixGroup, DEFAULT_SIZE_CAP};
use super::matrix::Matrix;
use super::presentation::verify_presentation;
use crate::error::{Error, Result};
use crate::exactnum::{Cyclotomic, Rational};
use crate::scalar::Fp;

/// The groups the builders know.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupName {
    Cyclic(u64),
    BinaryDihedral(u64),
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
    Sl2(u64),
}

impl GroupName {
    /// Order predicted by the classification.
    pub fn expected_order(&self) -> u64 {
        match *self {
            GroupName::Cyclic(n) => n,
            GroupName::BinaryDihedral(n) => 4 * n,
            GroupName::BinaryTetrahedral => 24,
            GroupName::BinaryOctahedral => 48,
            GroupName::BinaryIcosahedral => 120,
            GroupName::Sl2(p) => p * (p * p - 1),
        }
    }

    /// Whether the group comes with its defining SU(2) matrices.
    pub fn is_su2(&self) -> bool {
        !matches!(self, GroupName::Sl2(_))
    }

    /// Generator symbols, in the order the builder passes the generators.
    pub fn symbols(&self) -> &'static [char] {
        match self {
            GroupName::Cyclic(_) => &['R'],
            GroupName::BinaryDihedral(_) => &['R', 'S'],
            GroupName::Sl2(_) => &['X', 'Y'],
            _ => &['R', 'S', 'T'],
        }
    }

    /// The presentation relations for the SU(2) groups.
    pub fn relations(&self) -> Option<Vec<String>> {
        let chain = |t: u32| format!("RST = R^2 = S^3 = T^{t}");
        match *self {
            GroupName::Cyclic(n) => Some(vec![format!("R^{n} = 1")]),
            GroupName::BinaryDihedral(n) => Some(vec![format!("R^{n} = S^2 = (RS)^2")]),
            GroupName::BinaryTetrahedral => Some(vec![chain(3)]),
            GroupName::BinaryOctahedral => Some(vec![chain(4)]),
            GroupName::BinaryIcosahedral => Some(vec![chain(5)]),
            GroupName::Sl2(_) => None,
        }
    }

    /// Every builder group of order at most `max_order`, small parameters first.
    pub fn catalogue(max_order: u64) -> Vec<GroupName> {
        let mut out = Vec::new();
        out.extend((1..=max_order).map(GroupName::Cyclic));
        out.extend((1..=max_order / 4).map(GroupName::BinaryDihedral));
        out.extend(
            [
                GroupName::BinaryTetrahedral,
                GroupName::BinaryOctahedral,
                GroupName::BinaryIcosahedral,
            ]
            .into_iter()
            .chain(SL2_PRIMES.iter().map(|&p| GroupName::Sl2(p)))
            .filter(|g| g.expected_order() <= max_order),
        );
        out
    }
}

/// Primes for which `SL(2, p)` can be built.
pub const SL2_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::Cyclic(n) => write!(f, "cyclic-{n}"),
            GroupName::BinaryDihedral(n) => write!(f, "binary-dihedral-{n}"),
            GroupName::BinaryTetrahedral => write!(f, "binary-tetrahedral"),
            GroupName::BinaryOctahedral => write!(f, "binary-octahedral"),
            GroupName::BinaryIcosahedral => write!(f, "binary-icosahedral"),
            GroupName::Sl2(p) => write!(f, "sl2-{p}"),
        }
    }
}

impl FromStr for GroupName {
    type Err = Error;

    /// Accepts `cyclic-7`, `cyclic(7)`, `binary-dihedral-3`, `binaryDihedral(3)`,
    /// `sl2-5`, `SL2(5)` and the three exceptional names in either style.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownGroup(s.to_string());
        let norm: String = s
            .trim()
            .chars()
            .filter(|c| !matches!(c, '-' | '_' | ' ' | ')'))
            .map(|c| {
                if c == '(' {
                    ':'
                } else {
                    c.to_ascii_lowercase()
                }
            })
            .collect();
        let param = |prefix: &str| -> Option<u64> {
            let rest = norm.strip_prefix(prefix)?;
            rest.trim_start_matches(':').parse().ok()
        };
        let name = match norm.as_str() {
            "binarytetrahedral" => GroupName::BinaryTetrahedral,
            "binaryoctahedral" => GroupName::BinaryOctahedral,
            "binaryicosahedral" => GroupName::BinaryIcosahedral,
            _ => {
                if let Some(n) = param("binarydihedral") {
                    GroupName::BinaryDihedral(n)
                } else if let Some(n) = param("cyclic") {
                    GroupName::Cyclic(n)
                } else if let Some(p) = param("sl2") {
                    GroupName::Sl2(p)
                } else {
                    return Err(unknown());
                }
            }
        };
        match name {
            GroupName::Cyclic(0) | GroupName::BinaryDihedral(0) => Err(unknown()),
            GroupName::Sl2(p) if !is_prime(p) => Err(Error::NotPrime(p)),
            GroupName::Sl2(p) if !SL2_PRIMES.contains(&p) => Err(unknown()),
            _ => Ok(name),
        }
    }
}

fn rational(num: i64, den: i64) -> Cyclotomic {
    Cyclotomic::from_rational(Rational::new(num.into(), den.into()))
}

fn i_unit() -> Cyclotomic {
    Cyclotomic::root_of_unity(4, 1)
}

/// `a + bi + cj + dk` as a 2x2 complex matrix.
fn quaternion(a: Cyclotomic, b: Cyclotomic, c: Cyclotomic, d: Cyclotomic) -> Matrix<Cyclotomic> {
    let i = i_unit();
    Matrix::two_by_two(
        &a + &(&b * &i),
        &c + &(&d * &i),
        &(-&c) + &(&d * &i),
        &a - &(&b * &i),
    )
}

fn diagonal_root(n: u64) -> Matrix<Cyclotomic> {
    Matrix::two_by_two(
        Cyclotomic::root_of_unity(n, 1),
        Cyclotomic::zero(),
        Cyclotomic::zero(),
        Cyclotomic::root_of_unity(n, -1),
    )
}

/// `(1 + i + j + k) / 2`, shared by the three exceptional groups.
fn s_generator() -> Matrix<Cyclotomic> {
    let h = rational(1, 2);
    quaternion(h.clone(), h.clone(), h.clone(), h)
}

/// Generator matrices of an SU(2) group, in the order of [`GroupName::symbols`].
pub fn su2_generators(name: GroupName) -> Result<Vec<Matrix<Cyclotomic>>> {
    let zero = Cyclotomic::zero;
    let half = || rational(1, 2);
    Ok(match name {
        GroupName::Cyclic(n) if n >= 1 => vec![diagonal_root(n)],
        GroupName::BinaryDihedral(n) if n >= 1 => vec![
            diagonal_root(2 * n),
            Matrix::two_by_two(
                zero(),
                Cyclotomic::one(),
                Cyclotomic::from_integer(-1),
                zero(),
            ),
        ],
        GroupName::BinaryTetrahedral => {
            let r = quaternion(zero(), Cyclotomic::one(), zero(), zero());
            let t = quaternion(half(), half(), -half(), half());
            vec![r, s_generator(), t]
        }
        GroupName::BinaryOctahedral => {
            // 1/sqrt(2) = (zeta8 + zeta8^-1) / 2
            let inv_sqrt2 = (&Cyclotomic::root_of_unity(8, 1) + &Cyclotomic::root_of_unity(8, -1))
                .scale(&Rational::new(1.into(), 2.into()));
            let r = quaternion(zero(), inv_sqrt2.clone(), inv_sqrt2.clone(), zero());
            let t = quaternion(inv_sqrt2.clone(), inv_sqrt2, zero(), zero());
            vec![r, s_generator(), t]
        }
        GroupName::BinaryIcosahedral => {
            // golden ratio and its inverse in Q(zeta5)
            let inv_phi = &Cyclotomic::root_of_unity(5, 1) + &Cyclotomic::root_of_unity(5, -1);
            let phi = &inv_phi + &Cyclotomic::one();
            let h = Rational::new(1.into(), 2.into());
            let r = quaternion(zero(), inv_phi.scale(&h), phi.scale(&h), half());
            let t = quaternion(phi.scale(&h), inv_phi.scale(&h), half(), zero());
            vec![r, s_generator(), t]
        }
        _ => return Err(Error::NoDefiningRepresentation),
    })
}

/// An SU(2) group with its matrices; element traces are attached as the
/// defining character.
pub fn su2_group(name: GroupName, size_cap: usize) -> Result<MatrixGroup<Cyclotomic>> {
    let mut group = MatrixGroup::generate(&su2_generators(name)?, size_cap)?;
    group.attach_defining_traces();
    Ok(group)
}

fn sl2_over<const P: u32>(size_cap: usize) -> Result<FiniteGroup> {
    let f = |x| Fp::<P>::new(x);
    let gens = [
        Matrix::two_by_two(f(1), f(1), f(0), f(1)),
        Matrix::two_by_two(f(0), f(-1), f(1), f(0)),
    ];
    Ok(MatrixGroup::generate(&gens, size_cap)?.into_group())
}

/// `SL(2, p)` generated by `[[1,1],[0,1]]` and `[[0,-1],[1,0]]` over `F_p`.
pub fn sl2(p: u64, size_cap: usize) -> Result<FiniteGroup> {
    match p {
        2 => sl2_over::<2>(size_cap),
        3 => sl2_over::<3>(size_cap),
        5 => sl2_over::<5>(size_cap),
        7 => sl2_over::<7>(size_cap),
        11 => sl2_over::<11>(size_cap),
        13 => sl2_over::<13>(size_cap),
        p if !is_prime(p) => Err(Error::NotPrime(p)),
        p => Err(Error::UnknownGroup(format!("sl2-{p}"))),
    }
}

/// Builds a named group under the default size cap.
pub fn build_named_group(name: GroupName) -> Result<FiniteGroup> {
    build_named_group_with_cap(name, DEFAULT_SIZE_CAP)
}

pub fn build_named_group_with_cap(name: GroupName, size_cap: usize) -> Result<FiniteGroup> {
    match name {
        GroupName::Sl2(p) => sl2(p, size_cap),
        _ => Ok(su2_group(name, size_cap)?.into_group()),
    }
}

/// Parses a group name and builds it.
pub fn group_by_name(name: &str) -> Result<FiniteGroup> {
    build_named_group(name.parse()?)
}

/// Symbols of `name` bound to the group's generators.
pub fn standard_assignment(name: GroupName, group: &FiniteGroup) -> HashMap<char, usize> {
    name.symbols()
        .iter()
        .copied()
        .zip(group.generators().iter().copied())
        .collect()
}

/// Checks the presentation relations of an SU(2) group on its own generators.
pub fn check_named_presentation(name: GroupName, group: &FiniteGroup) -> Result<bool> {
    let relations = name.relations().ok_or(Error::NoDefiningRepresentation)?;
    let refs: Vec<&str> = relations.iter().map(String::as_str).collect();
    verify_presentation(group, &standard_assignment(name, group), &refs)
}
