//! Rigorous interval arithmetic on dyadic rationals with outward rounding.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

/// Closed interval `[lo, hi]` with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: BigRational,
    hi: BigRational,
}

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits
}

fn floor_to(x: &BigRational, bits: u32) -> BigRational {
    let s = pow2(bits);
    BigRational::new((x * BigRational::from_integer(s.clone())).floor().to_integer(), s)
}

fn ceil_to(x: &BigRational, bits: u32) -> BigRational {
    let s = pow2(bits);
    BigRational::new((x * BigRational::from_integer(s.clone())).ceil().to_integer(), s)
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Self { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::point(BigRational::from_integer(n.into()))
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn to_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&BigRational::zero())
    }

    /// Certified sign, or `None` when the interval straddles zero.
    pub fn sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// Round outward to multiples of `2^-bits`.
    pub fn rounded(&self, bits: u32) -> Self {
        Self {
            lo: floor_to(&self.lo, bits),
            hi: ceil_to(&self.hi, bits),
        }
    }

    pub fn abs_max(&self) -> BigRational {
        self.lo.abs().max(self.hi.abs())
    }

    /// Reciprocal; `None` if the interval contains zero.
    pub fn recip(&self) -> Option<Self> {
        if self.contains_zero() {
            return None;
        }
        Some(Self {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        })
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        Some(self * &other.recip()?)
    }

    /// Square root of the nonnegative part, rounded outward at `bits`.
    pub fn sqrt(&self, bits: u32) -> Option<Self> {
        if self.hi.is_negative() {
            return None;
        }
        let scale = BigRational::from_integer(pow2(2 * bits));
        let denom = pow2(bits);
        let lo = if self.lo.is_positive() {
            let a = (&self.lo * &scale).floor().to_integer();
            BigRational::new(a.sqrt(), denom.clone())
        } else {
            BigRational::zero()
        };
        let b = (&self.hi * &scale).ceil().to_integer();
        let mut s = b.sqrt();
        if &s * &s < b {
            s += 1;
        }
        Some(Self {
            lo,
            hi: BigRational::new(s, denom),
        })
    }

    /// Intersection, if nonempty.
    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = (&self.lo).max(&other.lo).clone();
        let hi = (&self.hi).min(&other.hi).clone();
        (lo <= hi).then_some(Self { lo, hi })
    }

    /// Decimal rendering of the midpoint with `digits` places.
    pub fn to_decimal(&self, digits: usize) -> String {
        crate::roots::format_decimal(&self.midpoint(), digits)
    }
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, rhs: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
        }
    }
}

impl Sub for &Interval {
    type Output = Interval;
    fn sub(self, rhs: &Interval) -> Interval {
        Interval {
            lo: &self.lo - &rhs.hi,
            hi: &self.hi - &rhs.lo,
        }
    }
}

impl Mul for &Interval {
    type Output = Interval;
    fn mul(self, rhs: &Interval) -> Interval {
        let c = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = c.iter().min().expect("four products").clone();
        let hi = c.iter().max().expect("four products").clone();
        Interval { lo, hi }
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo.to_f64().unwrap_or(f64::NAN), self.hi.to_f64().unwrap_or(f64::NAN))
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        crate::roots::format_enclosure(&self.lo, &self.hi, 15).serialize(s)
    }
}

/// `atan(1/x)` enclosed by the alternating series.
fn atan_recip(x: i64, bits: u32) -> Interval {
    let work = bits + 16;
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let tol = BigRational::new(BigInt::one(), pow2(bits + 8));
    let mut sum = Interval::from_integer(0);
    // 1/x^{2k+1}, carried as an outward-rounded interval.
    let mut power = Interval::point(BigRational::new(BigInt::one(), x.clone())).rounded(work);
    let x2_recip = Interval::point(BigRational::new(BigInt::one(), x2));
    let mut k: i64 = 0;
    loop {
        let term = Interval {
            lo: power.lo() / BigRational::from_integer(BigInt::from(2 * k + 1)),
            hi: power.hi() / BigRational::from_integer(BigInt::from(2 * k + 1)),
        }
        .rounded(work);
        if term.hi < tol {
            // The tail of an alternating decreasing series is bounded by its
            // first omitted term.
            return Interval {
                lo: &sum.lo - &term.hi,
                hi: &sum.hi + &term.hi,
            }
            .rounded(bits + 4);
        }
        sum = if k % 2 == 0 { &sum + &term } else { &sum - &term };
        power = (&power * &x2_recip).rounded(work);
        k += 1;
    }
}

fn pi_cache() -> &'static Mutex<HashMap<u32, Interval>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Interval>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Enclosure of `π` of width about `2^-bits`, by Machin's formula.
pub fn pi(bits: u32) -> Interval {
    if let Some(p) = pi_cache().lock().expect("pi cache").get(&bits) {
        return p.clone();
    }
    let a = atan_recip(5, bits + 8);
    let b = atan_recip(239, bits + 8);
    let sixteen = Interval::from_integer(16);
    let four = Interval::from_integer(4);
    let p = (&(&sixteen * &a) - &(&four * &b)).rounded(bits + 2);
    pi_cache().lock().expect("pi cache").insert(bits, p.clone());
    p
}

/// Rigorous bound on `cos(x)` for a rational `x` with `|x| <= 4`.
fn cos_point(x: &BigRational, bits: u32) -> Interval {
    let work = bits + 16;
    let x2 = Interval::point(x * x).rounded(work);
    let tol = BigRational::new(BigInt::one(), pow2(bits + 8));
    let mut sum = Interval::from_integer(0);
    let mut term = Interval::from_integer(1);
    let mut k: u64 = 0;
    loop {
        // Lagrange remainder after the x^{2k-2} term is at most |x|^{2k}/(2k)!.
        let bound = term.abs_max();
        if k > 0 && bound < tol {
            return Interval {
                lo: &sum.lo - &bound,
                hi: &sum.hi + &bound,
            }
            .rounded(bits + 4);
        }
        sum = &sum + &term;
        let d = BigRational::from_integer(BigInt::from((2 * k + 1) * (2 * k + 2)));
        let next = -&(&term * &x2);
        term = Interval {
            lo: next.lo / &d,
            hi: next.hi / &d,
        }
        .rounded(work);
        k += 1;
    }
}

/// Enclosure of `cos(π p/q)`.
pub fn cos_pi_frac(p: i64, q: i64, bits: u32) -> Interval {
    assert!(q > 0);
    let two_q = 2 * q;
    let mut p = p.rem_euclid(two_q);
    if p > q {
        p = two_q - p;
    }
    // Exact values where cheap.
    let g = p.gcd(&q);
    match (p / g, q / g) {
        (0, 1) => return Interval::from_integer(1),
        (1, 1) => return Interval::from_integer(-1),
        (1, 2) => return Interval::from_integer(0),
        (1, 3) => return Interval::point(BigRational::new(1.into(), 2.into())),
        (2, 3) => return Interval::point(BigRational::new((-1).into(), 2.into())),
        _ => {}
    }
    let frac = BigRational::new(p.into(), q.into());
    let pi_iv = pi(bits + 8);
    // θ = π p/q in [0, π]; cos is decreasing there.
    let a = &pi_iv.lo * &frac;
    let b = &pi_iv.hi * &frac;
    let hi = cos_point(&a, bits + 4).hi;
    let lo = cos_point(&b, bits + 4).lo;
    let one = BigRational::one();
    Interval {
        lo: lo.max(-one.clone()),
        hi: hi.min(one),
    }
    .rounded(bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn pi_enclosure() {
        let p = pi(200);
        assert!(p.width() < r(1, 1) / BigRational::from_integer(pow2(190)));
        // 3.14159265358979323846264338327950288...
        let approx = r(314159265358979323, 100000000000000000);
        assert!((&p.midpoint() - &approx).abs() < r(1, 100000000000000000));
        assert!(p.lo < r(3141592653589793239, 1_000_000_000_000_000_000));
        assert!(p.hi > r(3141592653589793238, 1_000_000_000_000_000_000));
    }

    #[test]
    fn cosines() {
        let c5 = cos_pi_frac(1, 5, 128);
        // cos(π/5) = (1 + √5)/4 = 0.80901699437494742410...
        assert!((c5.to_f64() - 0.809_016_994_374_947_4).abs() < 1e-15);
        assert!(c5.width() < r(1, 1 << 60));
        let c4 = cos_pi_frac(1, 4, 128);
        let sq = &c4 * &c4;
        assert!(sq.contains(&r(1, 2)));
        assert_eq!(cos_pi_frac(1, 3, 64), Interval::point(r(1, 2)));
        assert_eq!(cos_pi_frac(7, 2, 64), Interval::from_integer(0));
        let c = cos_pi_frac(13, 7, 128);
        assert!((c.to_f64() - (13.0 * std::f64::consts::PI / 7.0).cos()).abs() < 1e-14);
    }

    #[test]
    fn square_roots() {
        let s = Interval::from_integer(2).sqrt(100).unwrap();
        assert!((&s * &s).lo <= r(2, 1) && &r(2, 1) <= (&s * &s).hi());
        assert!(s.width() <= r(2, 1) / BigRational::from_integer(pow2(100)));
        assert!(Interval::from_integer(-1).sqrt(10).is_none());
        assert_eq!(Interval::from_integer(9).sqrt(10).unwrap().to_decimal(6), "3.000000");
    }

    #[test]
    fn arithmetic_encloses() {
        let a = Interval::new(r(-1, 2), r(1, 3));
        let b = Interval::new(r(2, 1), r(3, 1));
        let p = &a * &b;
        assert_eq!((p.lo().clone(), p.hi().clone()), (r(-3, 2), r(1, 1)));
        assert!(a.recip().is_none());
        assert_eq!(b.recip().unwrap(), Interval::new(r(1, 3), r(1, 2)));
        assert_eq!(a.sign(), None);
        assert_eq!(b.sign(), Some(Ordering::Greater));
    }
}
