use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Field, FromInt};

/// A truncated Laurent series `sum_{n=v}^{N} c_n q^n + O(q^(N+1))`.
///
/// `valuation` is `v`, `order` is `N`, and `coeffs[k]` holds `c_{v+k}`. The
/// leading coefficient is nonzero unless every known coefficient is zero, in
/// which case the series is stored as a single zero at `q^N`.
#[derive(Clone, PartialEq)]
pub struct LaurentSeries<T> {
    valuation: i64,
    coeffs: Vec<T>,
    order: i64,
}

impl<T: Field> LaurentSeries<T> {
    /// `coeffs` start at `q^valuation`; missing coefficients up to `order` are
    /// zero and anything past `order` is dropped.
    pub fn new(valuation: i64, mut coeffs: Vec<T>, order: i64) -> Self {
        assert!(order >= valuation, "truncation order below valuation");
        coeffs.resize((order - valuation + 1) as usize, T::zero());
        Self {
            valuation,
            coeffs,
            order,
        }
        .normalized()
    }

    /// `c q^exp + O(q^(order+1))`.
    pub fn monomial(exp: i64, c: T, order: i64) -> Self {
        Self::new(exp, vec![c], order)
    }

    pub fn one(order: i64) -> Self {
        Self::monomial(0, T::one(), order)
    }

    fn normalized(mut self) -> Self {
        let lead = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len() - 1);
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.valuation += lead as i64;
        }
        self
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Coefficient of `q^exp`, or `None` beyond the truncation order.
    pub fn coeff(&self, exp: i64) -> Option<T> {
        if exp > self.order {
            None
        } else if exp < self.valuation {
            Some(T::zero())
        } else {
            Some(self.coeffs[(exp - self.valuation) as usize].clone())
        }
    }

    pub fn leading(&self) -> &T {
        &self.coeffs[0]
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            valuation: self.valuation + k,
            coeffs: self.coeffs.clone(),
            order: self.order + k,
        }
    }

    /// Drops every coefficient past `order`.
    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        if order < self.valuation {
            return Self::new(order, vec![T::zero()], order);
        }
        Self::new(
            self.valuation,
            self.coeffs[..=(order - self.valuation) as usize].to_vec(),
            order,
        )
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(
            self.valuation,
            self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
            self.order,
        )
    }

    fn add_impl(&self, rhs: &Self, negate: bool) -> Self {
        let order = self.order.min(rhs.order);
        let valuation = self.valuation.min(rhs.valuation).min(order);
        let coeffs = (valuation..=order)
            .map(|e| {
                let a = self.coeff(e).unwrap();
                let b = rhs.coeff(e).unwrap();
                if negate {
                    a - b
                } else {
                    a + b
                }
            })
            .collect();
        Self::new(valuation, coeffs, order)
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        let valuation = self.valuation + rhs.valuation;
        let order = (self.order + rhs.valuation).min(rhs.order + self.valuation);
        let len = (order - valuation + 1) as usize;
        let mut out = vec![T::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(valuation, out, order)
    }

    /// Multiplicative inverse; the valuation negates and the relative
    /// precision is preserved.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = self.leading();
        if a0.is_zero() {
            return Err(Error::NonInvertibleSeries);
        }
        let inv0 = T::one() / a0.clone();
        let len = self.coeffs.len();
        let mut b: Vec<T> = Vec::with_capacity(len);
        b.push(inv0.clone());
        for n in 1..len {
            let mut acc = T::zero();
            for k in 1..=n {
                acc = acc + self.coeffs[k].clone() * b[n - k].clone();
            }
            b.push(-(acc * inv0.clone()));
        }
        let precision = self.order - self.valuation;
        Ok(Self::new(-self.valuation, b, -self.valuation + precision))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.order - self.valuation);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl<T: Field + FromInt> LaurentSeries<T> {
    /// The unique k-th root with constant term one of a series `1 + O(q)`.
    pub fn root(&self, k: u32) -> Result<Self> {
        if self.valuation != 0 || !self.leading().is_one() {
            return Err(Error::CubeRootUndefined);
        }
        // f = a^(1/k) satisfies  n f_n = sum_{j=1}^n ((1/k + 1) j - n) a_j f_{n-j}
        let k = k as i64;
        let len = self.coeffs.len();
        let mut f: Vec<T> = Vec::with_capacity(len);
        f.push(T::one());
        for n in 1..len as i64 {
            let mut acc = T::zero();
            for j in 1..=n {
                let a = &self.coeffs[j as usize];
                if a.is_zero() {
                    continue;
                }
                let weight = T::from_int((1 + k) * j - k * n);
                acc = acc + weight * a.clone() * f[(n - j) as usize].clone();
            }
            f.push(acc / T::from_int(k * n));
        }
        Ok(Self::new(0, f, self.order))
    }

    pub fn cube_root(&self) -> Result<Self> {
        self.root(3)
    }
}

impl<'a, T: Field> Add<&'a LaurentSeries<T>> for &'a LaurentSeries<T> {
    type Output = LaurentSeries<T>;
    fn add(self, rhs: &LaurentSeries<T>) -> LaurentSeries<T> {
        self.add_impl(rhs, false)
    }
}

impl<'a, T: Field> Sub<&'a LaurentSeries<T>> for &'a LaurentSeries<T> {
    type Output = LaurentSeries<T>;
    fn sub(self, rhs: &LaurentSeries<T>) -> LaurentSeries<T> {
        self.add_impl(rhs, true)
    }
}

impl<'a, T: Field> Mul<&'a LaurentSeries<T>> for &'a LaurentSeries<T> {
    type Output = LaurentSeries<T>;
    fn mul(self, rhs: &LaurentSeries<T>) -> LaurentSeries<T> {
        self.mul_impl(rhs)
    }
}

impl<T: Field> Neg for &LaurentSeries<T> {
    type Output = LaurentSeries<T>;
    fn neg(self) -> LaurentSeries<T> {
        LaurentSeries::new(
            self.valuation,
            self.coeffs.iter().map(|c| -c.clone()).collect(),
            self.order,
        )
    }
}

impl<T: Field + fmt::Display> fmt::Display for LaurentSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match self.valuation + k as i64 {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*q")?,
                e => write!(f, "({c})*q^{e}")?,
            }
        }
        if !first {
            write!(f, " + ")?;
        }
        write!(f, "O(q^{})", self.order + 1)
    }
}

impl<T: Field + fmt::Debug> fmt::Debug for LaurentSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LaurentSeries")
            .field("valuation", &self.valuation)
            .field("coeffs", &self.coeffs)
            .field("order", &self.order)
            .finish()
    }
}
