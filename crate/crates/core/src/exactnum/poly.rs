use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Distinct prime factors in ascending order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    prime_factors(n)
        .into_iter()
        .fold(n, |acc, p| acc / p * (p - 1))
}

fn mobius(n: u64) -> i32 {
    let mut m = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic polynomial.
fn poly_div_monic(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let dq = a.len() - 1 - db;
    let mut q = vec![0i64; dq + 1];
    for k in (0..=dq).rev() {
        let c = rem[k + db];
        q[k] = c;
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                rem[k + j] -= c * bj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    q
}

fn compute_cyclotomic(n: u64) -> Vec<i64> {
    let divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    let x_d_minus_1 = |d: u64| {
        let mut v = vec![0i64; d as usize + 1];
        v[0] = -1;
        v[d as usize] = 1;
        v
    };
    let mut num = vec![1i64];
    let mut den = vec![1i64];
    for &d in &divisors {
        match mobius(n / d) {
            1 => num = poly_mul(&num, &x_d_minus_1(d)),
            -1 => den = poly_mul(&den, &x_d_minus_1(d)),
            _ => {}
        }
    }
    // den is monic up to sign; normalise so the leading coefficient is 1
    if *den.last().unwrap() < 0 {
        den.iter_mut().for_each(|c| *c = -*c);
        num.iter_mut().for_each(|c| *c = -*c);
    }
    poly_div_monic(&num, &den)
}

/// The n-th cyclotomic polynomial, coefficients from the constant term up.
pub fn cyclotomic_polynomial(n: u64) -> Arc<[i64]> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<[i64]>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let p: Arc<[i64]> = compute_cyclotomic(n).into();
    cache.lock().unwrap().insert(n, p.clone());
    p
}
