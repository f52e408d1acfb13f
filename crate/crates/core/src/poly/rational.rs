use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{IntPolynomial, PolyError};

/// A reduced quotient of integer polynomials.
///
/// Invariants: the denominator is nonzero, numerator and denominator are
/// coprime over the rationals, their joint content is 1, and the lowest
/// nonzero coefficient of the denominator is positive. The zero function is
/// `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalFunction {
    numerator: IntPolynomial,
    denominator: IntPolynomial,
}

impl RationalFunction {
    pub fn new(numerator: IntPolynomial, denominator: IntPolynomial) -> Result<Self, PolyError> {
        if denominator.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if numerator.is_zero() {
            return Ok(Self::zero());
        }
        let g = numerator.gcd(&denominator)?;
        let mut num = numerator.exact_div(&g).expect("gcd divides numerator");
        let mut den = denominator.exact_div(&g).expect("gcd divides denominator");
        let c = num.content().gcd(&den.content());
        let low = den.lowest_degree().expect("nonzero denominator");
        let c = if den.coeffs()[low].is_negative() { -c } else { c };
        num = IntPolynomial::new(num.coeffs().iter().map(|a| a / &c).collect());
        den = IntPolynomial::new(den.coeffs().iter().map(|a| a / &c).collect());
        Ok(Self {
            numerator: num,
            denominator: den,
        })
    }

    /// Normalise parts already known to be coprime, skipping the gcd.
    pub(crate) fn from_coprime(
        numerator: IntPolynomial,
        denominator: IntPolynomial,
    ) -> Result<Self, PolyError> {
        if denominator.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if numerator.is_zero() {
            return Ok(Self::zero());
        }
        let c = numerator.content().gcd(&denominator.content());
        let low = denominator.lowest_degree().expect("nonzero denominator");
        let c = if denominator.coeffs()[low].is_negative() { -c } else { c };
        Ok(Self {
            numerator: IntPolynomial::new(numerator.coeffs().iter().map(|a| a / &c).collect()),
            denominator: IntPolynomial::new(denominator.coeffs().iter().map(|a| a / &c).collect()),
        })
    }

    /// `t ↦ 1/t` followed by inversion, for coprime parts: `D(1/t)/N(1/t)`
    /// written with reversed coefficients.
    pub(crate) fn invert_variable_recip(&self) -> Result<Self, PolyError> {
        let pad = self
            .numerator
            .degree_or_zero()
            .max(self.denominator.degree_or_zero());
        Self::from_coprime(self.denominator.reversed(pad), self.numerator.reversed(pad))
    }

    pub fn from_poly(p: IntPolynomial) -> Self {
        Self::new(p, IntPolynomial::one()).expect("unit denominator")
    }

    pub fn zero() -> Self {
        Self {
            numerator: IntPolynomial::zero(),
            denominator: IntPolynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(IntPolynomial::one())
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn recip(&self) -> Result<Self, PolyError> {
        Self::new(self.denominator.clone(), self.numerator.clone())
    }

    /// Value at a rational point, `None` at a pole.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.denominator.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.numerator.eval(x) / d)
    }

    /// The substitution `t ↦ 1/t`, done by coefficient reversal of both
    /// parts padded to the larger degree.
    pub fn invert_variable(&self) -> Self {
        let pad = self
            .numerator
            .degree_or_zero()
            .max(self.denominator.degree_or_zero());
        Self::new(self.numerator.reversed(pad), self.denominator.reversed(pad))
            .expect("reversal keeps the denominator nonzero")
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.numerator.scale(c), self.denominator.clone()).expect("nonzero denominator")
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / ({})", self.numerator, self.denominator)
        }
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.denominator == rhs.denominator {
            return RationalFunction::new(&self.numerator + &rhs.numerator, self.denominator.clone())
                .expect("nonzero denominator");
        }
        RationalFunction::new(
            &(&self.numerator * &rhs.denominator) + &(&rhs.numerator * &self.denominator),
            &self.denominator * &rhs.denominator,
        )
        .expect("nonzero denominator")
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs.clone())
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &self.numerator * &rhs.numerator,
            &self.denominator * &rhs.denominator,
        )
        .expect("nonzero denominator")
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            numerator: -self.numerator,
            denominator: self.denominator,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn reduces_and_normalizes() {
        // (2t^2 - 2) / (-4t - 4) = -(t - 1)/2
        let f = RationalFunction::new(p(&[-2, 0, 2]), p(&[-4, -4])).unwrap();
        assert_eq!(f.numerator(), &p(&[1, -1]));
        assert_eq!(f.denominator(), &p(&[2]));
    }

    #[test]
    fn infinite_dihedral_steinberg_sum() {
        // 1 - 2/[2] = (t - 1)/(t + 1)
        let two_over_bracket =
            RationalFunction::new(p(&[2]), IntPolynomial::bracket(2)).unwrap();
        let g = &RationalFunction::one() - &two_over_bracket;
        assert_eq!(g.numerator(), &p(&[-1, 1]));
        assert_eq!(g.denominator(), &p(&[1, 1]));
        let f = g.invert_variable().recip().unwrap();
        // f(t) = (1 + t)/(1 - t)
        assert_eq!(f.numerator(), &p(&[1, 1]));
        assert_eq!(f.denominator(), &p(&[1, -1]));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(p(&[1]), IntPolynomial::zero()),
            Err(PolyError::DivisionByZero)
        );
    }
}
