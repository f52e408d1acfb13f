//! Certified real-root isolation, growth rates, and Salem/Pisot/Perron
//! classification. All decisions use exact rational arithmetic.

mod classify;
mod disk;
mod sturm;

pub use classify::{classify_number, Certification, NumberClass, Verdict};
pub use disk::{count_in_disk, DiskCount};
pub use sturm::{sturm_count, SturmChain};

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::poly::{cyclotomic, euler_phi, IntPolynomial, RationalFunction};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("interval endpoint {0} is a root")]
    RootAtEndpoint(String),
    #[error("the series is a polynomial (finite group); growth rate is 1")]
    FiniteGroup,
    #[error("no singularity inside the unit disk; growth is not exponential")]
    NotExponential,
    #[error("the zero polynomial has no isolated roots")]
    ZeroPolynomial,
    #[error("precondition failed: {0}")]
    Precondition(String),
}

/// A real root of `defining_poly` isolated in the open interval `(lo, hi)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedRoot {
    defining_poly: IntPolynomial,
    lo: BigRational,
    hi: BigRational,
}

impl IsolatedRoot {
    /// Trusts the caller that `(lo, hi)` holds exactly one root and the
    /// endpoints are not roots.
    fn new_unchecked(defining_poly: IntPolynomial, lo: BigRational, hi: BigRational) -> Self {
        Self {
            defining_poly,
            lo,
            hi,
        }
    }

    pub fn defining_poly(&self) -> &IntPolynomial {
        &self.defining_poly
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

    /// Halve the interval until its width is at most `eps`.
    pub fn refine(&mut self, eps: &BigRational) {
        let two = BigRational::from_integer(2.into());
        let s_lo = self.defining_poly.sign_at(&self.lo);
        while self.width() > *eps {
            let mid = (&self.lo + &self.hi) / &two;
            let s_mid = self.defining_poly.sign_at(&mid);
            if s_mid == Ordering::Equal {
                // Rational root exactly at the midpoint: shrink around it.
                let quarter = self.width() / BigRational::from_integer(4.into());
                self.lo = &mid - &quarter;
                self.hi = &mid + &quarter;
            } else if s_mid == s_lo {
                self.lo = mid;
            } else {
                self.hi = mid;
            }
        }
    }

    pub fn refined(mut self, eps: &BigRational) -> Self {
        self.refine(eps);
        self
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn approx_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal rendering with `digits` places, after refining to a width
    /// well below the last displayed digit.
    pub fn to_decimal(&self, digits: usize) -> String {
        let eps = BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), digits + 3));
        let r = self.clone().refined(&eps);
        format_decimal(&r.midpoint(), digits)
    }

    /// The root `1/x` of the reversed polynomial. Requires `0 < lo`.
    pub fn reciprocal(&self) -> IsolatedRoot {
        assert!(self.lo.is_positive(), "reciprocal of a positive root only");
        let d = self.defining_poly.degree_or_zero();
        IsolatedRoot::new_unchecked(
            self.defining_poly.reversed(d).with_positive_leading(),
            self.hi.recip(),
            self.lo.recip(),
        )
    }

    /// Exact comparison of the root with a rational.
    pub fn compare_rational(&self, r: &BigRational) -> Ordering {
        if self.defining_poly.sign_at(r) == Ordering::Equal && self.lo < *r && *r < self.hi {
            return Ordering::Equal;
        }
        let mut x = self.clone();
        loop {
            if x.hi <= *r {
                return Ordering::Less;
            }
            if x.lo >= *r {
                return Ordering::Greater;
            }
            let w = x.width() / BigRational::from_integer(2.into());
            x.refine(&w);
        }
    }

    /// Exact comparison of two isolated roots. Overlapping intervals are
    /// resolved by the gcd of the defining polynomials: a common root in the
    /// overlap is the root of both.
    pub fn compare(&self, other: &IsolatedRoot) -> Ordering {
        let (mut a, mut b) = (self.clone(), other.clone());
        let g = a.defining_poly.gcd(&b.defining_poly).ok();
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            if let Some(g) = g.as_ref().filter(|g| g.degree_or_zero() > 0) {
                let lo = (&a.lo).max(&b.lo);
                let hi = (&a.hi).min(&b.hi);
                // Endpoints are never roots of `g`, which divides both polynomials.
                if sturm_count(g, Some(lo), Some(hi)).unwrap_or(0) > 0 {
                    return Ordering::Equal;
                }
            }
            let two = BigRational::from_integer(2.into());
            let (wa, wb) = (a.width() / &two, b.width() / &two);
            a.refine(&wa);
            b.refine(&wb);
        }
    }

    /// Sign-change and Sturm-count audit of the isolation invariant.
    pub fn verify(&self) -> bool {
        let a = self.defining_poly.sign_at(&self.lo);
        let b = self.defining_poly.sign_at(&self.hi);
        a != Ordering::Equal
            && b != Ordering::Equal
            && a != b
            && sturm_count(&self.defining_poly, Some(&self.lo), Some(&self.hi)) == Ok(1)
    }
}

/// `x` rounded half away from zero to `digits` decimal places.
pub fn format_decimal(x: &BigRational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = x * BigRational::from_integer(scale.clone());
    let rounded = scaled.round().to_integer();
    let neg = rounded.is_negative();
    let abs = rounded.abs();
    let int_part = &abs / &scale;
    let frac = &abs % &scale;
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{:0>width$}", frac.to_string(), width = digits)
    }
}

/// Decimal strings enclosing `[lo, hi]`: `lo` rounded down and `hi` rounded
/// up to `digits` places.
pub fn format_enclosure(lo: &BigRational, hi: &BigRational, digits: usize) -> [String; 2] {
    let scale = BigRational::from_integer(num_traits::pow(BigInt::from(10), digits));
    let down = BigRational::new((lo * &scale).floor().to_integer(), scale.to_integer());
    let up = BigRational::new((hi * &scale).ceil().to_integer(), scale.to_integer());
    [format_decimal(&down, digits), format_decimal(&up, digits)]
}

impl Serialize for IsolatedRoot {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("IsolatedRoot", 3)?;
        st.serialize_field("definingPoly", &self.defining_poly)?;
        st.serialize_field("interval", &format_enclosure(&self.lo, &self.hi, 15))?;
        st.serialize_field("approx", &self.to_decimal(12))?;
        st.end()
    }
}

impl fmt::Display for IsolatedRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(5))
    }
}

/// Cauchy bound: every root has absolute value below the returned integer.
fn cauchy_bound(p: &IntPolynomial) -> BigInt {
    let lc = p.leading().abs();
    let max = p.coeffs().iter().map(Signed::abs).max().unwrap_or_default();
    // 1 + max|a_i|/|a_n|, rounded up, plus one for strictness.
    BigInt::one() + (&max + &lc - BigInt::one()) / &lc + BigInt::one()
}

/// Isolate every real root of the square-free part of `p`, in increasing order.
pub fn isolate_real_roots(p: &IntPolynomial) -> Result<Vec<IsolatedRoot>, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let q = p.square_free_part().with_positive_leading();
    if q.degree_or_zero() == 0 {
        return Ok(Vec::new());
    }
    let chain = SturmChain::new(&q);
    let b = BigRational::from_integer(cauchy_bound(&q));
    let mut out = Vec::new();
    bisect(&q, &chain, -b.clone(), b, &mut out);
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    Ok(out)
}

/// Isolate the real roots of `q` (square-free) inside `(lo, hi)`.
fn bisect(q: &IntPolynomial, chain: &SturmChain, lo: BigRational, hi: BigRational, out: &mut Vec<IsolatedRoot>) {
    let count = chain.count(Some(&lo), Some(&hi));
    if count == 0 {
        return;
    }
    if count == 1 {
        out.push(IsolatedRoot::new_unchecked(q.clone(), lo, hi));
        return;
    }
    let mid = split_point(q, &lo, &hi);
    if q.sign_at(&mid) == Ordering::Equal {
        unreachable!("split_point avoids roots");
    }
    bisect(q, chain, lo, mid.clone(), out);
    bisect(q, chain, mid, hi, out);
}

/// A point strictly between `lo` and `hi`, close to the midpoint, that is
/// not a root of `q`.
fn split_point(q: &IntPolynomial, lo: &BigRational, hi: &BigRational) -> BigRational {
    let two = BigRational::from_integer(2.into());
    let mid = (lo + hi) / &two;
    if q.sign_at(&mid) != Ordering::Equal {
        return mid;
    }
    let mut step = (hi - lo) / BigRational::from_integer(8.into());
    loop {
        let cand = &mid + &step;
        if q.sign_at(&cand) != Ordering::Equal {
            return cand;
        }
        step /= &two;
    }
}

/// Result of cyclotomic stripping: `(d, multiplicity)` pairs and the rest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stripped {
    pub factors: Vec<(usize, u32)>,
    pub remainder: IntPolynomial,
}

impl Stripped {
    /// Cyclotomic indices, repeated by multiplicity.
    pub fn indices(&self) -> Vec<usize> {
        self.factors
            .iter()
            .flat_map(|&(d, e)| std::iter::repeat(d).take(e as usize))
            .collect()
    }
}

/// Remove every cyclotomic factor `Φ_n` with `φ(n) <= deg p`.
pub fn strip_cyclotomic(p: &IntPolynomial) -> Stripped {
    let mut rest = p.clone();
    let mut factors = Vec::new();
    let deg = p.degree_or_zero();
    // φ(n) >= sqrt(n/2), so n <= 2·deg² covers every candidate.
    let bound = (2 * deg * deg).max(2);
    for n in 1..=bound {
        let d = rest.degree_or_zero();
        if d == 0 {
            break;
        }
        if euler_phi(n) > d {
            continue;
        }
        let phi = cyclotomic(n);
        let mut e = 0;
        while let Some(q) = rest.exact_div(&phi) {
            rest = q;
            e += 1;
        }
        if e > 0 {
            factors.push((n, e));
        }
    }
    Stripped {
        factors,
        remainder: rest,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SelfReciprocity {
    Palindromic,
    AntiPalindromic,
    Neither,
}

impl fmt::Display for SelfReciprocity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SelfReciprocity::Palindromic => "palindromic",
            SelfReciprocity::AntiPalindromic => "anti-palindromic",
            SelfReciprocity::Neither => "neither",
        })
    }
}

pub fn is_self_reciprocal(p: &IntPolynomial) -> SelfReciprocity {
    match p.self_reciprocity() {
        Some(1) => SelfReciprocity::Palindromic,
        Some(_) => SelfReciprocity::AntiPalindromic,
        None => SelfReciprocity::Neither,
    }
}

/// Exponential growth rate of a growth series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthRate {
    /// `τ`, a root of the reversed cyclotomic-free denominator.
    pub tau: IsolatedRoot,
    /// Radius of convergence `R = 1/τ`.
    pub radius: IsolatedRoot,
    /// Cyclotomic factors removed from the square-free denominator.
    pub cyclotomic: Vec<(usize, u32)>,
}

impl GrowthRate {
    /// Polynomial of which `τ` is the largest real root.
    pub fn defining_polynomial(&self) -> &IntPolynomial {
        self.tau.defining_poly()
    }
}

/// `τ = 1/R` where `R` is the smallest positive pole of `f`, isolated to
/// width at most `eps`.
pub fn growth_rate(f: &RationalFunction, eps: &BigRational) -> Result<GrowthRate, RootError> {
    let q = f.denominator();
    if q.degree_or_zero() == 0 {
        return Err(RootError::FiniteGroup);
    }
    let stripped = strip_cyclotomic(&q.square_free_part());
    let rest = stripped.remainder.with_positive_leading();
    if rest.degree_or_zero() == 0 {
        return Err(RootError::NotExponential);
    }
    let d = rest.degree_or_zero();
    let reversed = rest.reversed(d).with_positive_leading();
    // Largest positive root of the reversed polynomial is 1/R when R < 1.
    let mut roots = isolate_real_roots(&reversed)?;
    let Some(top) = roots.pop() else {
        return Err(RootError::NotExponential);
    };
    let one = BigRational::one();
    let mut tau = top;
    // Refine until the interval is clear of 1 and has the requested width.
    loop {
        if tau.lo >= one {
            break;
        }
        if tau.hi <= one {
            return Err(RootError::NotExponential);
        }
        let w = tau.width() / BigRational::from_integer(2.into());
        tau.refine(&w);
    }
    tau.refine(eps);
    let radius = tau.reciprocal();
    Ok(GrowthRate {
        tau,
        radius,
        cyclotomic: stripped.factors,
    })
}

#[cfg(test)]
mod tests;
