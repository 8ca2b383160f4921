use num_bigint::BigInt;
use num_traits::{Pow, ToPrimitive};

use crate::error::{Error, Result};
use crate::qseries::{j_invariant, ramanujan_tau};

/// Order of the Monster, as a decimal literal.
pub const MONSTER_ORDER: &str = "808017424794512875886459904961710757005754368000000000";

/// Prime factorization of the Monster's order.
pub const MONSTER_FACTORIZATION: [(u32, u32); 15] = [
    (2, 46),
    (3, 20),
    (5, 9),
    (7, 6),
    (11, 2),
    (13, 3),
    (17, 1),
    (19, 1),
    (23, 1),
    (29, 1),
    (31, 1),
    (41, 1),
    (47, 1),
    (59, 1),
    (71, 1),
];

/// `prod p^e`.
pub fn evaluate_factorization(factors: &[(u32, u32)]) -> BigInt {
    factors
        .iter()
        .map(|&(p, e)| Pow::pow(BigInt::from(p), e))
        .product()
}

/// Whether `factors` multiplies out to the Monster's order.
pub fn matches_monster_order(factors: &[(u32, u32)]) -> bool {
    evaluate_factorization(factors) == MONSTER_ORDER.parse::<BigInt>().expect("literal")
}

/// The order identity together with `196883 = 47 * 59 * 71`.
pub fn monster_order_check() -> bool {
    matches_monster_order(&MONSTER_FACTORIZATION)
        && evaluate_factorization(&[(47, 1), (59, 1), (71, 1)]) == BigInt::from(196883)
}

/// Which coefficients to square and sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoefficientSource {
    /// `j(q) = sum c(n) q^n`, `n >= -1`.
    J,
    /// `Delta(q) = sum tau(n) q^n`, `n >= 1`.
    Tau,
}

/// `count` consecutive coefficients starting at exponent `start`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoefficientWindow {
    pub start: i64,
    pub count: usize,
    /// Use `j - 744`, i.e. treat the constant term of `j` as zero.
    pub drop_constant: bool,
}

impl CoefficientWindow {
    pub const fn new(start: i64, count: usize) -> Self {
        Self {
            start,
            count,
            drop_constant: false,
        }
    }

    /// `tau(1), ..., tau(24)`.
    pub const TAU: Self = Self::new(1, 24);

    /// `c(1), ..., c(24)` of `j`: the window that gives 42. Starting at the
    /// pole (`c(-1)..c(22)`) gives 53 and starting at the constant term
    /// (`c(0)..c(23)`) gives 32.
    pub const J: Self = Self::new(1, 24);

    pub fn default_for(source: CoefficientSource) -> Self {
        match source {
            CoefficientSource::J => Self::J,
            CoefficientSource::Tau => Self::TAU,
        }
    }
}

/// Coefficient of `q^n` in `j - 744`.
pub fn j_coefficient(n: i64) -> Result<BigInt> {
    if n < -1 || n == 0 {
        return Ok(BigInt::from(0));
    }
    let j = j_invariant(n)?;
    Ok(j.coeff(n).expect("within order").to_integer())
}

/// The coefficients selected by `window`.
pub fn window_coefficients(
    source: CoefficientSource,
    window: CoefficientWindow,
) -> Result<Vec<BigInt>> {
    if window.count == 0 {
        return Ok(Vec::new());
    }
    let last = window.start + window.count as i64 - 1;
    let exps = window.start..=last;
    match source {
        CoefficientSource::J => {
            let j = j_invariant(last.max(-1))?;
            Ok(exps
                .map(|n| {
                    if n == 0 && window.drop_constant {
                        BigInt::from(0)
                    } else {
                        j.coeff(n).expect("within order").to_integer()
                    }
                })
                .collect())
        }
        CoefficientSource::Tau => {
            if window.start < 0 {
                return Err(Error::InvalidOrder(window.start));
            }
            let tau = ramanujan_tau(last.max(0) as usize)?;
            Ok(exps
                .map(|n| {
                    if n == 0 {
                        BigInt::from(0)
                    } else {
                        tau[n as usize - 1].clone()
                    }
                })
                .collect())
        }
    }
}

/// `sum c^2 mod 70` over the window, in `[0, 70)`.
pub fn meaning_of_life(source: CoefficientSource, window: CoefficientWindow) -> Result<u32> {
    let sum: BigInt = window_coefficients(source, window)?
        .iter()
        .map(|c| c * c)
        .sum();
    let residue: BigInt = ((sum % 70) + 70) % 70;
    Ok(residue.to_u32().expect("residue below 70"))
}
