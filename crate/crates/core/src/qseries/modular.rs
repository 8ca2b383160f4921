//! q-expansions of Eisenstein series, the modular invariant `j`, the
//! discriminant and its coefficients (Ramanujan's tau), all over exact
//! rationals.
//!
//! Eisenstein series use the divisor-sum Fourier expansion normalized to
//! constant term one: `E_2k = 1 - (4k / B_2k) sum sigma_{2k-1}(n) q^n`.
//! With that normalization the modular invariant is
//! `j = 1728 E4^3 / (E4^3 - E6^2) = q^-1 + 744 + 196884 q + ...`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

use super::laurent::LaurentSeries;
use crate::error::{Error, Result};
use crate::exactnum::Rational;

pub type QSeries = LaurentSeries<Rational>;

/// Bernoulli number `B_n` from `sum_{j=0}^{m} C(m+1, j) B_j = 0`, `B_0 = 1`
/// (so `B_1 = -1/2`).
pub fn bernoulli(n: usize) -> Rational {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    b.push(Rational::one());
    for m in 1..=n {
        // row m+1 of Pascal's triangle
        let mut binom = BigInt::one();
        let mut acc = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += Rational::from_integer(binom.clone()) * bj;
            binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
        }
        // coefficient of B_m is C(m+1, m) = m+1
        b.push(-acc / Rational::from_integer(BigInt::from(m + 1)));
    }
    b.pop().unwrap()
}

/// `sigma_k(n)` for `n = 0..=max` (entry 0 is zero), by a divisor sieve.
pub fn divisor_sigma_table(max: usize, k: u32) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); max + 1];
    for d in 1..=max {
        let dk = BigInt::from(d).pow(k);
        for m in (d..=max).step_by(d) {
            out[m] += &dk;
        }
    }
    out
}

/// `E_weight` to `O(q^(order+1))`.
pub fn eisenstein(weight: i64, order: i64) -> Result<QSeries> {
    if weight < 4 || weight % 2 != 0 {
        return Err(Error::InvalidWeight(weight));
    }
    if order < 0 {
        return Err(Error::InvalidOrder(order));
    }
    let factor = -Rational::from_integer(BigInt::from(2 * weight)) / bernoulli(weight as usize);
    let sigma = divisor_sigma_table(order as usize, (weight - 1) as u32);
    let mut coeffs = Vec::with_capacity(order as usize + 1);
    coeffs.push(Rational::one());
    coeffs.extend(
        sigma[1..]
            .iter()
            .map(|s| &factor * Rational::from_integer(s.clone())),
    );
    Ok(QSeries::new(0, coeffs, order))
}

/// `E4^3 - E6^2`, which is `1728 q + O(q^2)`.
fn cusp_numerator(order: i64) -> Result<(QSeries, QSeries)> {
    let e4 = eisenstein(4, order)?;
    let e6 = eisenstein(6, order)?;
    let e4_cubed = &(&e4 * &e4) * &e4;
    let numerator = &e4_cubed - &(&e6 * &e6);
    Ok((e4_cubed, numerator))
}

/// The discriminant `Delta = (E4^3 - E6^2) / 1728 = q - 24 q^2 + ...`, whose
/// coefficients are Ramanujan's `tau(n)`.
pub fn discriminant(order: i64) -> Result<QSeries> {
    if order < 1 {
        return Err(Error::InvalidOrder(order));
    }
    let (_, numerator) = cusp_numerator(order)?;
    Ok(numerator.scale(&Rational::new(1.into(), 1728.into())))
}

/// `tau(1), ..., tau(count)`.
pub fn ramanujan_tau(count: usize) -> Result<Vec<BigInt>> {
    let delta = discriminant(count.max(1) as i64)?;
    Ok((1..=count as i64)
        .map(|n| delta.coeff(n).unwrap().to_integer())
        .collect())
}

/// The modular invariant to `O(q^(order+1))`.
pub fn j_invariant(order: i64) -> Result<QSeries> {
    if order < -1 {
        return Err(Error::InvalidOrder(order));
    }
    // the division by a valuation-one series costs two orders of precision
    let (e4_cubed, numerator) = cusp_numerator(order + 2)?;
    let denominator = numerator.scale(&Rational::new(1.into(), 1728.into()));
    let j = &e4_cubed * &denominator.inverse()?;
    Ok(j.truncate(order))
}

/// `(q j(q))^(1/3) = 1 + 248 q + ...` to `O(q^(order+1))`.
pub fn cube_root_of_q_j(order: i64) -> Result<QSeries> {
    if order < 0 {
        return Err(Error::InvalidOrder(order));
    }
    j_invariant(order - 1)?.shift(1).cube_root()
}

/// Numerical value of a truncated series at a point of the upper half-plane.
#[derive(Debug, Clone, Copy)]
pub struct Evaluation {
    pub value: Complex64,
    /// Magnitude of the last summed term, a heuristic bound on the tail.
    pub error_bound: f64,
}

impl QSeries {
    /// Sums `c_n q^n` with `q = exp(2 pi i tau)`.
    pub fn eval_at_tau(&self, tau: Complex64) -> Result<Evaluation> {
        if tau.im <= 0.0 || !tau.im.is_finite() {
            return Err(Error::OutsideUpperHalfPlane);
        }
        let two_pi_i_tau = Complex64::new(0.0, std::f64::consts::TAU) * tau;
        let mut value = Complex64::zero();
        let mut last = 0.0;
        for (k, c) in self.coeffs().iter().enumerate() {
            let n = self.valuation() + k as i64;
            let term = (two_pi_i_tau * n as f64).exp() * c.to_f64().unwrap_or(f64::NAN);
            value += term;
            last = term.norm();
        }
        Ok(Evaluation {
            value,
            error_bound: last,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &QSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| {
                assert!(c.is_integer());
                c.to_integer().to_i64().unwrap()
            })
            .collect()
    }

    #[test]
    fn bernoulli_convention() {
        assert_eq!(bernoulli(1), Rational::new((-1).into(), 2.into()));
        assert_eq!(bernoulli(2), Rational::new(1.into(), 6.into()));
        assert_eq!(bernoulli(4), Rational::new((-1).into(), 30.into()));
        assert_eq!(bernoulli(12), Rational::new((-691).into(), 2730.into()));
        assert!(bernoulli(7).is_zero());
    }

    #[test]
    fn eisenstein_examples() {
        assert_eq!(ints(&eisenstein(4, 2).unwrap()), vec![1, 240, 2160]);
        assert_eq!(ints(&eisenstein(6, 2).unwrap()), vec![1, -504, -16632]);
        let e = eisenstein(4, 0).unwrap();
        assert_eq!(ints(&e), vec![1]);
        assert_eq!(e.order(), 0);
        for bad in [2, 3, 5, 0, -4] {
            assert_eq!(eisenstein(bad, 3), Err(Error::InvalidWeight(bad)));
        }
    }

    #[test]
    fn eisenstein_integrality() {
        for w in [4, 6, 8, 10, 14] {
            assert!(eisenstein(w, 15)
                .unwrap()
                .coeffs()
                .iter()
                .all(|c| c.is_integer()));
        }
        // 65520/691 appears at weight 12
        let e12 = eisenstein(12, 1).unwrap();
        assert_eq!(
            e12.coeff(1).unwrap(),
            Rational::new(65520.into(), 691.into())
        );
    }

    #[test]
    fn e4_squared_first_coefficient() {
        let e4 = eisenstein(4, 4).unwrap();
        assert_eq!(
            (&e4 * &e4).coeff(1).unwrap(),
            Rational::from_integer(480.into())
        );
    }

    #[test]
    fn j_expansion() {
        let j = j_invariant(4).unwrap();
        assert_eq!(j.valuation(), -1);
        assert_eq!(
            ints(&j),
            vec![1, 744, 196884, 21493760, 864299970, 20245856256]
        );
        assert_eq!(j_invariant(-1).unwrap().coeffs().len(), 1);
        assert_eq!(j_invariant(-2), Err(Error::InvalidOrder(-2)));
    }

    #[test]
    fn tau_values() {
        let tau = ramanujan_tau(5).unwrap();
        let expect: Vec<BigInt> = [1, -24, 252, -1472, 4830]
            .iter()
            .map(|&x| x.into())
            .collect();
        assert_eq!(tau, expect);
        assert!(discriminant(0).is_err());
    }

    #[test]
    fn cube_root_of_j() {
        let f = cube_root_of_q_j(3).unwrap();
        assert_eq!(ints(&f), vec![1, 248, 4124, 34752]);
    }

    #[test]
    fn evaluation_requires_upper_half_plane() {
        let j = j_invariant(5).unwrap();
        assert_eq!(
            j.eval_at_tau(Complex64::new(0.3, 0.0)).unwrap_err(),
            Error::OutsideUpperHalfPlane
        );
        assert!(j.eval_at_tau(Complex64::new(0.0, -1.0)).is_err());
    }
}
