//! Exact arithmetic in the cyclotomic field `Q(ζ_L)`, `ζ_L = e^{2πi/L}`.
//!
//! Gram entries `cos(π/m)` and square roots of integers all live in a
//! suitable cyclotomic field, so exact elimination decides zero pivots
//! without rounding; signs of nonzero elements come from interval
//! evaluation at increasing precision.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::interval::{cos_pi_frac, Interval};
use crate::poly::cyclotomic;

type RatPoly = Vec<BigRational>;

fn trim(mut p: RatPoly) -> RatPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    let n = a.len().max(b.len());
    let z = BigRational::zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
}

fn poly_div_rem(a: &[BigRational], b: &[BigRational]) -> (RatPoly, RatPoly) {
    let mut rem = trim(a.to_vec());
    let db = b.len() - 1;
    let lc = b[db].clone();
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let q = &rem[k + db] / &lc;
        if !q.is_zero() {
            for (i, c) in b.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
        }
        quot[k] = q;
    }
    (trim(quot), trim(rem))
}

/// The field `Q(ζ_L)` with its defining polynomial `Φ_L`.
#[derive(Debug, PartialEq, Eq)]
pub struct CycloField {
    order: usize,
    modulus: RatPoly,
}

impl CycloField {
    pub fn new(order: usize) -> Arc<Self> {
        assert!(order >= 1);
        let phi = cyclotomic(order);
        Arc::new(Self {
            order,
            modulus: phi.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Whether `√c` lies in the field, for square-free `c >= 1`: every odd
    /// prime `p | c` needs `p | L`, and `4p | L` when `p ≡ 3 mod 4`; a factor
    /// 2 needs `8 | L`.
    pub fn contains_sqrt(&self, c: u64) -> bool {
        let l = self.order as u64;
        let mut rest = c;
        let mut p = 2;
        while rest > 1 {
            if rest % p == 0 {
                let ok = match p {
                    2 => l % 8 == 0,
                    _ if p % 4 == 1 => l % p == 0,
                    _ => l % (4 * p) == 0,
                };
                if !ok {
                    return false;
                }
                rest /= p;
            }
            p += 1;
        }
        true
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, p: RatPoly) -> RatPoly {
        if p.len() <= self.degree() {
            return trim(p);
        }
        poly_div_rem(&p, &self.modulus).1
    }
}

/// Element of a cyclotomic field, stored reduced modulo `Φ_L`.
#[derive(Clone, Debug)]
pub struct CycloElem {
    field: Arc<CycloField>,
    coeffs: RatPoly,
}

impl PartialEq for CycloElem {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for CycloElem {}

impl CycloElem {
    pub fn rational(field: &Arc<CycloField>, r: BigRational) -> Self {
        Self {
            field: field.clone(),
            coeffs: trim(vec![r]),
        }
    }

    pub fn integer(field: &Arc<CycloField>, n: i64) -> Self {
        Self::rational(field, BigRational::from_integer(n.into()))
    }

    pub fn zero(field: &Arc<CycloField>) -> Self {
        Self::integer(field, 0)
    }

    pub fn one(field: &Arc<CycloField>) -> Self {
        Self::integer(field, 1)
    }

    /// `ζ_L^k`.
    pub fn zeta_pow(field: &Arc<CycloField>, k: i64) -> Self {
        let l = field.order as i64;
        let k = k.rem_euclid(l) as usize;
        let mut c = vec![BigRational::zero(); k + 1];
        c[k] = BigRational::one();
        Self {
            field: field.clone(),
            coeffs: field.reduce(c),
        }
    }

    /// `cos(π/m)`; requires `2m | L`.
    pub fn cos_pi_over(field: &Arc<CycloField>, m: u32) -> Self {
        let l = field.order as i64;
        let two_m = 2 * i64::from(m);
        assert!(l % two_m == 0, "cos(π/{m}) needs 2·{m} | {l}");
        let k = l / two_m;
        let half = BigRational::new(1.into(), 2.into());
        (&Self::zeta_pow(field, k) + &Self::zeta_pow(field, -k)).scale(&half)
    }

    /// Positive square root of a square-free integer `c >= 1`; requires
    /// [`CycloField::contains_sqrt`].
    pub fn sqrt_int(field: &Arc<CycloField>, c: u64) -> Self {
        let mut out = Self::one(field);
        let mut rest = c;
        let mut p = 2;
        while rest > 1 {
            if rest % p == 0 {
                out = &out * &Self::sqrt_prime(field, p);
                rest /= p;
            }
            p += 1;
        }
        out
    }

    fn sqrt_prime(field: &Arc<CycloField>, p: u64) -> Self {
        let l = field.order as i64;
        if p == 2 {
            assert!(l % 8 == 0, "√2 needs 8 | L");
            return &Self::zeta_pow(field, l / 8) + &Self::zeta_pow(field, -(l / 8));
        }
        let pi = p as i64;
        assert!(field.contains_sqrt(p), "√{p} is not in Q(ζ_{l})");
        // Quadratic Gauss sum: √p for p ≡ 1 mod 4, i√p for p ≡ 3 mod 4.
        let mut g = Self::zero(field);
        for k in 1..pi {
            let term = Self::zeta_pow(field, k * (l / pi));
            if legendre(k, pi) == 1 {
                g = &g + &term;
            } else {
                g = &g - &term;
            }
        }
        if p % 4 == 1 {
            g
        } else {
            // √p = -i · g.
            &Self::zeta_pow(field, -(l / 4)) * &g
        }
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The rational value, if the element is rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self {
            field: self.field.clone(),
            coeffs: trim(self.coeffs.iter().map(|c| c * r).collect()),
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // Extended Euclid: s·a + t·Φ = g with g a nonzero constant.
        let (mut r0, mut r1) = (self.field.modulus.clone(), self.coeffs.clone());
        let (mut s0, mut s1): (RatPoly, RatPoly) = (Vec::new(), vec![BigRational::one()]);
        while r1.len() > 1 {
            let (q, r) = poly_div_rem(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        let g = r1.first().cloned()?;
        let inv = s1.iter().map(|c| c / &g).collect();
        Some(Self {
            field: self.field.clone(),
            coeffs: self.field.reduce(inv),
        })
    }

    /// Real part of the complex value, enclosed at `bits` of precision.
    pub fn real_interval(&self, bits: u32) -> Interval {
        let l = self.field.order as i64;
        let mut acc = Interval::from_integer(0);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // Re ζ^k = cos(2πk/L).
            let cos = cos_cached(2 * k as i64, l, bits + 8);
            acc = &acc + &(&cos * &Interval::point(c.clone()));
        }
        acc.rounded(bits + 4)
    }

    /// Sign of a real element. Exact for zero; otherwise refined until the
    /// enclosure excludes zero.
    pub fn sign(&self) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        if let Some(r) = self.as_rational() {
            return r.cmp(&BigRational::zero());
        }
        let mut bits = 64;
        loop {
            if let Some(s) = self.real_interval(bits).sign() {
                return s;
            }
            bits *= 2;
            assert!(bits <= 1 << 16, "sign of a nonzero field element did not resolve");
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.real_interval(64).to_f64()
    }

    /// `(a, b)` with `self = a + b√c`, when such rationals exist. Uses an
    /// automorphism `σ` with `σ(√c) = -√c`: `a = (x + σx)/2` and
    /// `b√c = (x - σx)/2`.
    pub fn as_quadratic(&self, c: u64) -> Option<(BigRational, BigRational)> {
        if let Some(r) = self.as_rational() {
            return Some((r, BigRational::zero()));
        }
        let l = self.field.order;
        let root = Self::sqrt_int(&self.field, c);
        let k = (2..l).find(|&k| k.gcd(&l) == 1 && root.apply_automorphism(k) == -&root)?;
        let twin = self.apply_automorphism(k);
        let half = BigRational::new(1.into(), 2.into());
        let a = (self + &twin).scale(&half).as_rational()?;
        let b = (&(self - &twin) * &root)
            .scale(&BigRational::new(1.into(), BigInt::from(2 * c)))
            .as_rational()?;
        Some((a, b))
    }

    /// `ζ ↦ ζ^k` for `gcd(k, L) = 1`.
    pub fn apply_automorphism(&self, k: usize) -> Self {
        let l = self.field.order;
        let mut c = vec![BigRational::zero(); l];
        for (i, x) in self.coeffs.iter().enumerate() {
            c[(i * k) % l] += x;
        }
        Self {
            field: self.field.clone(),
            coeffs: self.field.reduce(trim(c)),
        }
    }
}

fn legendre(a: i64, p: i64) -> i64 {
    let mut r: i64 = 1;
    let e = (p - 1) / 2;
    let mut base = a.rem_euclid(p);
    let mut e2 = e;
    while e2 > 0 {
        if e2 & 1 == 1 {
            r = r * base % p;
        }
        base = base * base % p;
        e2 >>= 1;
    }
    if r == 1 {
        1
    } else {
        -1
    }
}

type CosCache = std::sync::Mutex<HashMap<(i64, i64, u32), Interval>>;

fn cos_cache() -> &'static CosCache {
    static CACHE: std::sync::OnceLock<CosCache> =
        std::sync::OnceLock::new();
    CACHE.get_or_init(|| std::sync::Mutex::new(HashMap::new()))
}

fn cos_cached(p: i64, q: i64, bits: u32) -> Interval {
    let key = (p, q, bits);
    if let Some(v) = cos_cache().lock().expect("cos cache").get(&key) {
        return v.clone();
    }
    let v = cos_pi_frac(p, q, bits);
    cos_cache().lock().expect("cos cache").insert(key, v.clone());
    v
}

impl std::ops::Add for &CycloElem {
    type Output = CycloElem;
    fn add(self, rhs: &CycloElem) -> CycloElem {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = BigRational::zero();
        CycloElem {
            field: self.field.clone(),
            coeffs: trim((0..n).map(|i| self.coeffs.get(i).unwrap_or(&z) + rhs.coeffs.get(i).unwrap_or(&z)).collect()),
        }
    }
}

impl std::ops::Sub for &CycloElem {
    type Output = CycloElem;
    fn sub(self, rhs: &CycloElem) -> CycloElem {
        CycloElem {
            field: self.field.clone(),
            coeffs: poly_sub(&self.coeffs, &rhs.coeffs),
        }
    }
}

impl std::ops::Mul for &CycloElem {
    type Output = CycloElem;
    fn mul(self, rhs: &CycloElem) -> CycloElem {
        CycloElem {
            field: self.field.clone(),
            coeffs: self.field.reduce(poly_mul(&self.coeffs, &rhs.coeffs)),
        }
    }
}

impl std::ops::Neg for &CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        CycloElem {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        for c in [5u64, 2, 3] {
            if self.field.contains_sqrt(c) {
                if let Some((a, b)) = self.as_quadratic(c) {
                    return write!(f, "{a} + {b}*sqrt({c})");
                }
            }
        }
        write!(f, "{}", self.real_interval(64).to_decimal(12))
    }
}

/// Smallest `L` such that `Q(ζ_L)` contains `cos(π/m)` for every `m` and
/// `√c` for every square-free `c`.
pub fn field_order(orders: impl IntoIterator<Item = u32>, radicands: impl IntoIterator<Item = u64>) -> usize {
    let mut l: usize = 2;
    for m in orders {
        l = l.lcm(&(2 * m as usize));
    }
    for c in radicands {
        if c > 1 {
            l = l.lcm(&(4 * c as usize));
            if c % 2 == 0 {
                l = l.lcm(&8);
            }
        }
    }
    l
}
