//! Exact univariate polynomial arithmetic over the integers.
//!
//! [`IntPolynomial`] is the carrier of every growth series in this crate. It
//! is a dense coefficient vector, lowest degree first, with no trailing
//! zeros. The zero polynomial is the empty vector.

mod cyclotomic;
mod rational;

pub use cyclotomic::{bracket_factors, cyclotomic, euler_phi};
pub use rational::RationalFunction;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("division by the zero polynomial")]
    DivisionByZero,
}

/// Polynomial with arbitrary-precision integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<Coefficient>", into = "Vec<Coefficient>")]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

/// Serialized coefficient: a JSON integer when it fits in `i64`, otherwise a
/// decimal string.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Coefficient {
    Small(i64),
    Big(String),
}

impl TryFrom<Vec<Coefficient>> for IntPolynomial {
    type Error = String;

    fn try_from(cs: Vec<Coefficient>) -> Result<Self, String> {
        cs.into_iter()
            .map(|c| match c {
                Coefficient::Small(v) => Ok(BigInt::from(v)),
                Coefficient::Big(s) => s.parse().map_err(|_| format!("invalid coefficient `{s}`")),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }
}

impl From<IntPolynomial> for Vec<Coefficient> {
    fn from(p: IntPolynomial) -> Self {
        p.coeffs
            .iter()
            .map(|c| i64::try_from(c).map_or_else(|_| Coefficient::Big(c.to_string()), Coefficient::Small))
            .collect()
    }
}

impl From<Vec<BigInt>> for IntPolynomial {
    fn from(coeffs: Vec<BigInt>) -> Self {
        Self::new(coeffs)
    }
}

impl From<IntPolynomial> for Vec<BigInt> {
    fn from(p: IntPolynomial) -> Self {
        p.coeffs
    }
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The identity polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    /// `[k] = 1 + t + ... + t^(k-1)`.
    pub fn bracket(k: usize) -> Self {
        Self::new(vec![BigInt::one(); k])
    }

    /// Product `[k_1]·[k_2]·…`.
    pub fn bracket_product(ks: &[usize]) -> Self {
        ks.iter().fold(Self::one(), |acc, &k| &acc * &Self::bracket(k))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention `deg 0 = 0`; handy for padding arithmetic.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Smallest index with a nonzero coefficient.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// `t^pad · p(1/t)`; requires `pad >= deg p`.
    pub fn reversed(&self, pad: usize) -> Self {
        assert!(
            self.degree().is_none_or(|d| d <= pad),
            "reversal padding smaller than the degree"
        );
        let mut coeffs = vec![BigInt::zero(); pad + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[pad - i] = c.clone();
        }
        Self::new(coeffs)
    }

    /// `p(-t)`.
    pub fn negate_variable(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// gcd of the coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divide by the content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Make the leading coefficient positive without touching the content.
    pub fn with_positive_leading(self) -> Self {
        if self.leading().is_negative() {
            -self
        } else {
            self
        }
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let n = self.degree_or_zero() as u32;
        let num = self.homogeneous_eval(x.numer(), x.denom());
        BigRational::new(num, num_traits::pow(x.denom().clone(), n as usize))
    }

    /// `q^deg · p(a/q)`, an integer with the sign of `p(a/q)` when `q > 0`.
    fn homogeneous_eval(&self, a: &BigInt, q: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c * &qpow;
            qpow *= q;
        }
        acc
    }

    /// Sign of `p(x)` for rational `x`.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        self.homogeneous_eval(x.numer(), x.denom()).cmp(&BigInt::zero())
    }

    /// Sign of `p(t)` as `t → +∞`.
    pub fn sign_at_pos_infinity(&self) -> Ordering {
        self.leading().cmp(&BigInt::zero())
    }

    /// Sign of `p(t)` as `t → -∞`.
    pub fn sign_at_neg_infinity(&self) -> Ordering {
        match self.degree() {
            None => Ordering::Equal,
            Some(d) if d % 2 == 0 => self.sign_at_pos_infinity(),
            Some(_) => self.sign_at_pos_infinity().reverse(),
        }
    }

    /// Division with remainder when the divisor's leading coefficient
    /// divides every step exactly. Returns `None` if a non-integral quotient
    /// coefficient appears.
    pub fn div_rem(&self, d: &Self) -> Result<Option<(Self, Self)>, PolyError> {
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let dd = d.degree_or_zero();
        let lc = d.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok(Some((Self::zero(), self.clone())));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lc);
            if !r.is_zero() {
                return Ok(None);
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        Ok(Some((Self::new(quot), Self::new(rem))))
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`
    /// over the integers.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        match self.div_rem(d) {
            Ok(Some((q, r))) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    /// Sign-preserving pseudo-remainder: `|lc(d)|^(δ+1) · self mod d`.
    ///
    /// Multiplying by a positive scalar keeps Sturm and Cauchy-index chains
    /// valid, which the classic `lc^(δ+1)` does not when `lc(d) < 0`.
    pub fn pseudo_rem(&self, d: &Self) -> Result<Self, PolyError> {
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let dd = d.degree_or_zero();
        let Some(sd) = self.degree() else {
            return Ok(Self::zero());
        };
        if sd < dd {
            return Ok(self.clone());
        }
        let lc = d.leading();
        let lc_abs = lc.abs();
        let sign = if lc.is_negative() { -BigInt::one() } else { BigInt::one() };
        let mut rem = self.coeffs.clone();
        for k in (0..=(sd - dd)).rev() {
            let top = rem[k + dd].clone();
            for c in rem.iter_mut() {
                *c *= &lc_abs;
            }
            if top.is_zero() {
                continue;
            }
            let q = top * &sign;
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
        }
        Ok(Self::new(rem))
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Result<Self, PolyError> {
        if self.is_zero() && other.is_zero() {
            return Err(PolyError::GcdOfZeros);
        }
        if self.is_zero() {
            return Ok(other.primitive_part());
        }
        if other.is_zero() {
            return Ok(self.primitive_part());
        }
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b)?;
            a = b;
            b = r.primitive_part();
        }
        Ok(a.primitive_part())
    }

    /// `p / gcd(p, p')`, primitive with positive leading coefficient.
    pub fn square_free_part(&self) -> Self {
        if self.degree_or_zero() == 0 {
            return self.primitive_part();
        }
        let g = self
            .gcd(&self.derivative())
            .expect("nonconstant polynomial has nonzero derivative");
        self.primitive_part()
            .exact_div(&g)
            .expect("gcd divides the polynomial")
            .primitive_part()
    }

    /// Composition `p(q(t))`.
    pub fn compose(&self, q: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * q) + &Self::constant(c.clone()))
    }

    /// Integer coefficients as `i64`, when they all fit.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    /// Sum of the coefficients, i.e. `p(1)`.
    pub fn value_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiplicity of `t = 1` as a root.
    pub fn multiplicity_at_one(&self) -> usize {
        let t_minus_one = Self::from_i64(&[-1, 1]);
        let mut p = self.clone();
        let mut k = 0;
        while !p.is_zero() && p.value_at_one().is_zero() {
            p = p.exact_div(&t_minus_one).expect("root at one");
            k += 1;
        }
        k
    }

    /// Whether `p(t) = ±t^d p(1/t)` with `d = deg p`; the sign returned is `+1`
    /// for palindromic, `-1` for anti-palindromic.
    pub fn self_reciprocity(&self) -> Option<i8> {
        let d = self.degree()?;
        let rev = self.reversed(d);
        if rev == *self {
            Some(1)
        } else if rev == -self.clone() {
            Some(-1)
        } else {
            None
        }
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = !mag.is_one() || i == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i);
                    let b = rhs.coeffs.get(i);
                    match (a, b) {
                        (Some(a), Some(b)) => a + b,
                        (Some(a), None) => a.clone(),
                        (None, Some(b)) => b.clone(),
                        (None, None) => BigInt::zero(),
                    }
                })
                .collect(),
        )
    }
}

impl Sub<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs.clone())
    }
}

impl Mul<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn json_is_a_plain_coefficient_list() {
        let big = &p(&[1, 0, 1]) * &IntPolynomial::from_i64(&[i64::MAX]);
        let doubled = &big + &big;
        for q in [p(&[1, -1, 0, 2]), doubled] {
            let text = serde_json::to_string(&q).unwrap();
            assert_eq!(serde_json::from_str::<IntPolynomial>(&text).unwrap(), q);
        }
        assert_eq!(serde_json::to_string(&p(&[1, -1, 0, 2])).unwrap(), "[1,-1,0,2]");
    }

    #[test]
    fn bracket_product_expands() {
        assert_eq!(&IntPolynomial::bracket(2) * &IntPolynomial::bracket(3), p(&[1, 2, 2, 1]));
        assert_eq!(IntPolynomial::bracket_product(&[2, 3]), p(&[1, 2, 2, 1]));
    }

    #[test]
    fn adding_zero_is_identity() {
        let q = p(&[3, -1, 4]);
        assert_eq!(&q + &IntPolynomial::zero(), q);
    }

    #[test]
    fn h4_growth_polynomial_has_degree_sixty() {
        let h4 = IntPolynomial::bracket_product(&[2, 12, 20, 30]);
        assert_eq!(h4.degree(), Some(60));
        assert_eq!(h4.value_at_one(), BigInt::from(14400));
    }

    #[test]
    fn gcd_examples() {
        let a = IntPolynomial::bracket_product(&[2, 4]);
        let b = IntPolynomial::bracket(2);
        assert_eq!(a.gcd(&b).unwrap(), p(&[1, 1]));
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 0, 0, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(
            IntPolynomial::zero().gcd(&IntPolynomial::zero()),
            Err(PolyError::GcdOfZeros)
        );
    }

    #[test]
    fn gcd_is_primitive_with_positive_leading() {
        let a = p(&[2, 2]).scale(&BigInt::from(-3));
        let g = a.gcd(&p(&[-6, 0, 6])).unwrap();
        assert_eq!(g, p(&[1, 1]));
    }

    #[test]
    fn square_free_part_folds_multiplicity() {
        let sq = p(&[-1, 1]).pow(2);
        assert_eq!(sq.square_free_part(), p(&[-1, 1]));
    }

    #[test]
    fn reversal_and_reciprocity() {
        let q = p(&[1, -1, -1, -1, 1]);
        assert_eq!(q.self_reciprocity(), Some(1));
        assert_eq!(p(&[-1, -1, 0, 1]).self_reciprocity(), None);
        assert_eq!(p(&[-1, 0, 1]).self_reciprocity(), Some(-1));
        assert_eq!(p(&[1, 2]).reversed(3), p(&[0, 0, 2, 1]));
    }

    #[test]
    fn sign_and_eval_agree() {
        let q = p(&[-2, 0, 1]);
        let x = BigRational::new(3.into(), 2.into());
        assert_eq!(q.eval(&x), BigRational::new(1.into(), 4.into()));
        assert_eq!(q.sign_at(&x), Ordering::Greater);
        assert_eq!(q.sign_at(&BigRational::from_integer(1.into())), Ordering::Less);
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(p(&[1, -1, 0, 2]).to_string(), "2t^3 - t + 1");
        assert_eq!(p(&[0, -1]).to_string(), "-t");
    }

    fn arb_poly() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-20i64..20, 0..7).prop_map(|v| IntPolynomial::from_i64(&v))
    }

    proptest! {
        #[test]
        fn gcd_divides_both(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assume!(!a.is_zero() || !b.is_zero());
            let a = &a * &c;
            let b = &b * &c;
            if a.is_zero() && b.is_zero() { return Ok(()); }
            let g = a.gcd(&b).unwrap();
            prop_assert!(a.is_zero() || a.primitive_part().exact_div(&g).is_some());
            prop_assert!(b.is_zero() || b.primitive_part().exact_div(&g).is_some());
            if !c.is_zero() {
                prop_assert!(g.exact_div(&c.primitive_part()).is_some());
            }
        }

        #[test]
        fn exact_division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.exact_div(&b), Some(a));
        }

        #[test]
        fn eval_is_a_ring_homomorphism(a in arb_poly(), b in arb_poly(), n in -7i64..7, d in 1i64..6) {
            let x = BigRational::new(n.into(), d.into());
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        }
    }
}
