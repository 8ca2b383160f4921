use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{cyclotomic_polynomial, prime_factors};
use super::rational::{parse_rational, render_rational, Rational};
use crate::error::{Error, Result};

/// An element of the cyclotomic field `Q(zeta_n)`.
///
/// The element is stored in the power basis `1, z, ..., z^(phi(n)-1)` of
/// `Q[z]/(Phi_n(z))`, where `n` is the smallest conductor whose field
/// contains the element and `n` is never `2 mod 4`. Together these make the
/// representation canonical: two values are equal exactly when their fields
/// compare equal, so derived `Eq`, `Hash` and `Ord` are meaningful.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<Rational>,
}

/// Folds `sum c_e z_n^e` (exponents already in `[0, n)`) into the power basis
/// of `Q(zeta_n)` by long division with `Phi_n`.
fn reduce_dense(n: u64, mut dense: Vec<Rational>) -> Vec<Rational> {
    let phi = cyclotomic_polynomial(n);
    let deg = phi.len() - 1;
    for top in (deg..dense.len()).rev() {
        if dense[top].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut dense[top], Rational::zero());
        for (j, &pj) in phi[..deg].iter().enumerate() {
            if pj != 0 {
                dense[top - deg + j] -= &c * Rational::from_integer(pj.into());
            }
        }
    }
    dense.truncate(deg);
    dense.resize(deg, Rational::zero());
    dense
}

/// Maps a dense vector over `zeta_n` with `n = 2 mod 4` onto `zeta_{n/2}`,
/// using `zeta_n = -zeta_m^((m+1)/2)` for odd `m = n/2`.
fn halve_conductor(n: u64, dense: Vec<Rational>) -> (u64, Vec<Rational>) {
    let m = n / 2;
    let mut out = vec![Rational::zero(); m as usize];
    let step = (m + 1) / 2;
    for (e, c) in dense.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let e = e as u64;
        let target = ((e % m) * step % m) as usize;
        if e % 2 == 0 {
            out[target] += c;
        } else {
            out[target] -= c;
        }
    }
    (m, out)
}

fn inverse_mod(a: u64, m: u64) -> u64 {
    let ext = (a as i64).extended_gcd(&(m as i64));
    debug_assert_eq!(ext.gcd, 1);
    ext.x.rem_euclid(m as i64) as u64
}

impl Cyclotomic {
    /// Builds `sum c * zeta_conductor^e` and normalizes it.
    pub fn from_powers<I>(conductor: u64, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        if conductor == 0 {
            return Err(Error::ZeroConductor);
        }
        let mut dense = vec![Rational::zero(); conductor as usize];
        for (e, c) in terms {
            dense[e.rem_euclid(conductor as i64) as usize] += c;
        }
        Ok(Self::from_dense(conductor, dense))
    }

    fn from_dense(n: u64, dense: Vec<Rational>) -> Self {
        let (n, dense) = if n % 4 == 2 {
            halve_conductor(n, dense)
        } else {
            (n, dense)
        };
        Self {
            conductor: n,
            coeffs: reduce_dense(n, dense),
        }
        .minimized()
    }

    /// `zeta_n^k`.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        Self::from_powers(n, [(k, Rational::one())]).expect("positive conductor")
    }

    pub fn from_rational(r: Rational) -> Self {
        Self {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Power-basis coefficients over the minimal conductor.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        (self.conductor == 1).then(|| &self.coeffs[0])
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn is_integer(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_integer())
    }

    /// Expresses `self` in the power basis of `Q(zeta_target)`; `target` must
    /// be a multiple of the conductor and not `2 mod 4`.
    fn lifted(&self, target: u64) -> Vec<Rational> {
        if target == self.conductor {
            return self.coeffs.clone();
        }
        let scale = (target / self.conductor) as usize;
        let mut dense = vec![Rational::zero(); target as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                dense[i * scale] = c.clone();
            }
        }
        reduce_dense(target, dense)
    }

    /// Image under the normalized relative trace onto `Q(zeta_m)`, `m = n/p`.
    /// Returns the dense vector over `zeta_m`; it equals `self` exactly when
    /// `self` already lies in the subfield.
    fn project(&self, p: u64) -> (u64, Vec<Rational>) {
        let n = self.conductor;
        let m = n / p;
        let mut dense = vec![Rational::zero(); m as usize];
        if m % p == 0 {
            for (i, c) in self.coeffs.iter().enumerate() {
                if i as u64 % p == 0 && !c.is_zero() {
                    dense[(i as u64 / p) as usize] += c;
                }
            }
        } else {
            let p_inv = inverse_mod(p % m.max(1), m.max(1));
            let m_inv = inverse_mod(m % p, p);
            let scale = Rational::from_integer((p - 1).into());
            for (i, c) in self.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let i = i as u64;
                let a = if m == 1 { 0 } else { i % m * p_inv % m };
                let b = i % p * m_inv % p;
                let term = c / &scale;
                if b == 0 {
                    dense[a as usize] += c;
                } else {
                    dense[a as usize] -= term;
                }
            }
        }
        (m, dense)
    }

    fn minimized(mut self) -> Self {
        'descend: loop {
            if self.conductor == 1 {
                return self;
            }
            if self.coeffs[1..].iter().all(Zero::is_zero) {
                let r = self.coeffs.swap_remove(0);
                return Self::from_rational(r);
            }
            for p in prime_factors(self.conductor) {
                let (m, dense) = self.project(p);
                let (m, dense) = if m % 4 == 2 {
                    halve_conductor(m, dense)
                } else {
                    (m, dense)
                };
                let candidate = Self {
                    conductor: m,
                    coeffs: reduce_dense(m, dense),
                };
                if candidate.lifted(self.conductor) == self.coeffs {
                    self = candidate;
                    continue 'descend;
                }
            }
            return self;
        }
    }

    fn common_conductor(&self, other: &Self) -> u64 {
        self.conductor.lcm(&other.conductor)
    }

    /// Applies the Galois automorphism `zeta_n -> zeta_n^k`, `gcd(k, n) = 1`.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.conductor;
        let mut dense = vec![Rational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let e = (i as i64 * k).rem_euclid(n as i64) as usize;
                dense[e] += c;
            }
        }
        Self {
            conductor: n,
            coeffs: reduce_dense(n, dense),
        }
    }

    /// Complex conjugate: `zeta_n -> zeta_n^-1`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Image under `zeta_n -> exp(2 pi i / n)`.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.conductor as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let angle = std::f64::consts::TAU * i as f64 / n;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), angle)
            })
            .sum()
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Self::from_rational(Rational::one())
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let n = self.common_conductor(rhs);
        let mut a = self.lifted(n);
        for (x, y) in a.iter_mut().zip(rhs.lifted(n)) {
            *x += y;
        }
        Cyclotomic {
            conductor: n,
            coeffs: a,
        }
        .minimized()
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if let Some(r) = self.as_rational() {
            return rhs.scale(r);
        }
        if let Some(r) = rhs.as_rational() {
            return self.scale(r);
        }
        let n = self.common_conductor(rhs);
        let a = self.lifted(n);
        let b = rhs.lifted(n);
        let mut dense = vec![Rational::zero(); n as usize];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    dense[(i + j) % n as usize] += x * y;
                }
            }
        }
        Cyclotomic::from_dense(n, dense)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl fmt::Display for Cyclotomic {
    /// Polynomial in `z{n}`, e.g. `1/2+1/2*z5^2`; plain `p/q` for rationals.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let abs = c.abs();
            if negative {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let power = match i {
                0 => None,
                1 => Some(format!("z{}", self.conductor)),
                _ => Some(format!("z{}^{}", self.conductor, i)),
            };
            match power {
                None => write!(f, "{}", render_rational(&abs))?,
                Some(p) if abs.is_one() => write!(f, "{p}")?,
                Some(p) => write!(f, "{}*{}", render_rational(&abs), p)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_term(term: &str, whole: &str) -> Result<(u64, i64, Rational)> {
    let bad = || Error::Parse(whole.to_string());
    let (coef, power) = match term.find('z') {
        None => return Ok((1, 0, parse_rational(term).map_err(|_| bad())?)),
        Some(pos) => {
            let coef = term[..pos].strip_suffix('*').unwrap_or(&term[..pos]);
            let coef = if coef.is_empty() {
                Rational::one()
            } else {
                parse_rational(coef).map_err(|_| bad())?
            };
            (coef, &term[pos + 1..])
        }
    };
    let (n, e) = match power.split_once('^') {
        Some((n, e)) => (n, e.parse::<i64>().map_err(|_| bad())?),
        None => (power, 1),
    };
    let n: u64 = n.parse().map_err(|_| bad())?;
    if n == 0 {
        return Err(Error::ZeroConductor);
    }
    Ok((n, e, coef))
}

impl FromStr for Cyclotomic {
    type Err = Error;

    /// Accepts any sum of terms `c`, `c*zN^e`, `zN^e` or `zN`; terms may mix
    /// conductors.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse(s.to_string()));
        }
        let mut terms = Vec::new();
        let mut current = String::new();
        for (idx, ch) in compact.char_indices() {
            let prev = compact[..idx].chars().last();
            let splits = (ch == '+' || ch == '-')
                && idx > 0
                && !matches!(prev, Some('^') | Some('/') | Some('*'));
            if splits {
                terms.push(std::mem::take(&mut current));
            }
            current.push(ch);
        }
        terms.push(current);

        let mut parsed = Vec::with_capacity(terms.len());
        for t in &terms {
            let (sign, body) = match t.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, t.strip_prefix('+').unwrap_or(t)),
            };
            if body.is_empty() {
                return Err(Error::Parse(s.to_string()));
            }
            let (n, e, c) = parse_term(body, s)?;
            let c = if sign < 0 { -c } else { c };
            parsed.push((n, e, c));
        }
        let n = parsed.iter().fold(1u64, |acc, (n, _, _)| acc.lcm(n));
        Self::from_powers(
            n,
            parsed.into_iter().map(|(k, e, c)| (e * (n / k) as i64, c)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn sqrt5() -> Cyclotomic {
        Cyclotomic::from_powers(
            5,
            [(1, q(1, 1)), (2, q(-1, 1)), (3, q(-1, 1)), (4, q(1, 1))],
        )
        .unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(
            Cyclotomic::from_powers(4, [(2, q(1, 1))]).unwrap(),
            Cyclotomic::from_integer(-1)
        );
        assert_eq!(
            Cyclotomic::from_powers(3, [(1, q(1, 1)), (2, q(1, 1))]).unwrap(),
            Cyclotomic::from_integer(-1)
        );
        let s = sqrt5();
        assert!((s.to_complex().re - 5f64.sqrt()).abs() < 1e-12);
        assert!(s.to_complex().im.abs() < 1e-12);
        assert!(Cyclotomic::from_powers(0, []).is_err());
    }

    #[test]
    fn idempotent_normalization() {
        let s = sqrt5();
        let again = Cyclotomic::from_powers(
            s.conductor(),
            s.coefficients()
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64, c.clone())),
        )
        .unwrap();
        assert_eq!(s, again);
    }

    #[test]
    fn golden_ratio_product() {
        let half = q(1, 2);
        let phi = &Cyclotomic::from_rational(half.clone()) + &sqrt5().scale(&half);
        let phi_bar = &Cyclotomic::from_rational(half.clone()) - &sqrt5().scale(&half);
        assert_eq!(&phi * &phi_bar, Cyclotomic::from_integer(-1));
        assert!((phi.to_complex().re - 1.618_033_988_749_895).abs() < 1e-12);
        assert_eq!(phi.conductor(), 5);
    }

    #[test]
    fn arithmetic_identities() {
        let z5 = Cyclotomic::root_of_unity(5, 1);
        assert_eq!(&z5 * &Cyclotomic::root_of_unity(5, 4), Cyclotomic::one());
        assert_eq!(&z5 + &Cyclotomic::zero(), z5);
        // zeta_6 lives in Q(zeta_3)
        assert_eq!(Cyclotomic::root_of_unity(6, 1).conductor(), 3);
        // i * i = -1 across the lift to conductor 12
        let i = Cyclotomic::root_of_unity(4, 1);
        let w = Cyclotomic::root_of_unity(3, 1);
        let iw = &i * &w;
        assert_eq!(iw.conductor(), 12);
        assert_eq!(
            &(&iw * &iw) * &(&w * &w),
            Cyclotomic::from_integer(-1) * w.pow(4)
        );
    }

    #[test]
    fn conductor_descends() {
        // zeta_8 + zeta_8^-1 = sqrt(2) stays in conductor 8, zeta_8^2 = i drops to 4
        let z8 = Cyclotomic::root_of_unity(8, 1);
        assert_eq!(z8.pow(2).conductor(), 4);
        let r2 = &z8 + &z8.conj();
        assert_eq!(r2.conductor(), 8);
        assert_eq!(&r2 * &r2, Cyclotomic::from_integer(2));
        // sqrt(-3) in conductor 3 obtained from conductor 12 data
        let z12 = Cyclotomic::root_of_unity(12, 1);
        let s = &z12.pow(4) - &z12.pow(8);
        assert_eq!(s.conductor(), 3);
        // 15 = 3 * 5: the coprime projection path
        let z15 = Cyclotomic::root_of_unity(15, 1);
        assert_eq!(z15.pow(5).conductor(), 3);
        assert_eq!(z15.pow(3).conductor(), 5);
        let sum: Cyclotomic = (0..15)
            .map(|k| Cyclotomic::root_of_unity(15, k))
            .fold(Cyclotomic::zero(), |a, b| &a + &b);
        assert!(sum.is_zero());
    }

    #[test]
    fn conjugation() {
        assert_eq!(
            Cyclotomic::root_of_unity(3, 1).conj(),
            Cyclotomic::root_of_unity(3, 2)
        );
        assert_eq!(sqrt5().conj(), sqrt5());
        let a: Cyclotomic = "1/3+2*z7-5/2*z7^3".parse().unwrap();
        assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn embedding_basics() {
        let one = Cyclotomic::one().to_complex();
        assert_eq!((one.re, one.im), (1.0, 0.0));
        let i = Cyclotomic::root_of_unity(4, 1).to_complex();
        assert!(i.re.abs() < 1e-15 && (i.im - 1.0).abs() < 1e-15);
    }

    #[test]
    fn render_and_parse() {
        let half = q(1, 2);
        let phi = &Cyclotomic::from_rational(half.clone()) + &sqrt5().scale(&half);
        assert_eq!(phi.to_string(), "-z5^2-z5^3");
        let from_text: Cyclotomic = "1/2+1/2*z5-1/2*z5^2-1/2*z5^3+1/2*z5^4".parse().unwrap();
        assert_eq!(from_text, phi);
        assert_eq!(Cyclotomic::from_rational(q(-3, 4)).to_string(), "-3/4");
        assert_eq!("0".parse::<Cyclotomic>().unwrap(), Cyclotomic::zero());
        assert_eq!(
            "z4^-1".parse::<Cyclotomic>().unwrap(),
            -Cyclotomic::root_of_unity(4, 1)
        );
        assert_eq!(
            "z3+z4".parse::<Cyclotomic>().unwrap(),
            &Cyclotomic::root_of_unity(3, 1) + &Cyclotomic::root_of_unity(4, 1)
        );
        assert!("z0".parse::<Cyclotomic>().is_err());
        assert!("1+".parse::<Cyclotomic>().is_err());
        assert!("abc".parse::<Cyclotomic>().is_err());
    }
}
