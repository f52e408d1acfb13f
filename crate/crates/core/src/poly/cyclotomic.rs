use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use super::IntPolynomial;

fn cache() -> &'static Mutex<HashMap<usize, IntPolynomial>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, IntPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial `Φ_n`, `n >= 1`.
pub fn cyclotomic(n: usize) -> IntPolynomial {
    assert!(n >= 1, "cyclotomic index starts at 1");
    if let Some(p) = cache().lock().expect("cyclotomic cache").get(&n) {
        return p.clone();
    }
    // Φ_n = (t^n - 1) / ∏_{d | n, d < n} Φ_d
    let mut p = &IntPolynomial::monomial(BigInt::one(), n) - &IntPolynomial::one();
    for d in divisors(n).into_iter().filter(|&d| d < n) {
        p = p
            .exact_div(&cyclotomic(d))
            .expect("cyclotomic polynomials divide t^n - 1");
    }
    cache()
        .lock()
        .expect("cyclotomic cache")
        .insert(n, p.clone());
    p
}

/// Indices `d > 1` with `[k] = ∏ Φ_d`, i.e. the divisors of `k` except 1.
pub fn bracket_factors(k: usize) -> Vec<usize> {
    divisors(k).into_iter().filter(|&d| d > 1).collect()
}

pub fn euler_phi(mut n: usize) -> usize {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub(crate) fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
