//! Quadratic extensions `K(√D)` of a cyclotomic field `K`, for Gram entries
//! solved from a quadratic equation.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::cyclo::{CycloElem, CycloField};
use super::interval::Interval;

/// `a + b√D` with `a, b` in `K` and `D > 0` in `K`. Without an extension,
/// `b` is zero and `d` is `None`.
///
/// `D` may turn out to be a square in `K`; zero tests and inverses detect
/// this exactly through `a² - b²D = 0` and then work with `√D = ±a/b`.
#[derive(Clone, Debug)]
pub struct QuadElem {
    a: CycloElem,
    b: CycloElem,
    d: Option<Arc<CycloElem>>,
}

impl PartialEq for QuadElem {
    fn eq(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }
}

impl Eq for QuadElem {}

impl From<CycloElem> for QuadElem {
    fn from(a: CycloElem) -> Self {
        let b = CycloElem::zero(a.field());
        Self { a, b, d: None }
    }
}

impl QuadElem {
    /// `a + b√d` for a positive real `d`.
    pub fn new(a: CycloElem, b: CycloElem, d: Arc<CycloElem>) -> Self {
        Self { a, b, d: Some(d) }
    }

    pub fn field(&self) -> &Arc<CycloField> {
        self.a.field()
    }

    pub fn is_zero(&self) -> bool {
        match self.collapse() {
            Some(a) => a.is_zero(),
            None => false,
        }
    }

    /// The element as a member of `K`, if its `√D` part vanishes.
    pub fn base(&self) -> Option<&CycloElem> {
        self.b.is_zero().then_some(&self.a)
    }

    /// `a² - b²D`.
    fn norm_down(&self) -> CycloElem {
        let d = self.d.as_ref().expect("extension present");
        &(&self.a * &self.a) - &(&(&self.b * &self.b) * d)
    }

    /// The element as a member of `K` when it is one: either `b = 0`, or `D`
    /// is a square and `√D = |a/b|` is substituted. `None` means the element
    /// lies outside `K` and is in particular nonzero.
    fn collapse(&self) -> Option<CycloElem> {
        if self.b.is_zero() {
            return Some(self.a.clone());
        }
        if !self.norm_down().is_zero() {
            return None;
        }
        let mut s = &self.a * &self.b.inverse().expect("nonzero");
        if s.sign() == Ordering::Less {
            s = -&s;
        }
        Some(&self.a + &(&self.b * &s))
    }

    /// `(a, Some((b, D)))` for `a + b√D`, or `(a, None)` inside `K`.
    pub fn parts(&self) -> (&CycloElem, Option<(&CycloElem, &CycloElem)>) {
        match (&self.d, self.b.is_zero()) {
            (Some(d), false) => (&self.a, Some((&self.b, d.as_ref()))),
            _ => (&self.a, None),
        }
    }

    fn ext(&self, other: &Self) -> Option<Arc<CycloElem>> {
        self.d.clone().or_else(|| other.d.clone())
    }

    fn conjugate(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        if let Some(a) = self.collapse() {
            return a.inverse().map(Self::from);
        }
        // (a + b√D)⁻¹ = (a - b√D) / (a² - b²D).
        let inv = self.norm_down().inverse()?;
        let c = self.conjugate();
        Some(Self {
            a: &c.a * &inv,
            b: &c.b * &inv,
            d: c.d,
        })
    }

    pub fn real_interval(&self, bits: u32) -> Interval {
        let a = self.a.real_interval(bits);
        if self.b.is_zero() {
            return a;
        }
        let d = self.d.as_ref().expect("extension present");
        let root = d.real_interval(bits + 8).sqrt(bits + 8).expect("positive radicand");
        (&a + &(&self.b.real_interval(bits) * &root)).rounded(bits + 4)
    }

    pub fn sign(&self) -> Ordering {
        if let Some(a) = self.collapse() {
            return a.sign();
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
}

impl std::ops::Add for &QuadElem {
    type Output = QuadElem;
    fn add(self, rhs: &QuadElem) -> QuadElem {
        QuadElem {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            d: self.ext(rhs),
        }
    }
}

impl std::ops::Sub for &QuadElem {
    type Output = QuadElem;
    fn sub(self, rhs: &QuadElem) -> QuadElem {
        QuadElem {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            d: self.ext(rhs),
        }
    }
}

impl std::ops::Mul for &QuadElem {
    type Output = QuadElem;
    fn mul(self, rhs: &QuadElem) -> QuadElem {
        let d = self.ext(rhs);
        let mut a = &self.a * &rhs.a;
        if !self.b.is_zero() && !rhs.b.is_zero() {
            a = &a + &(&(&self.b * &rhs.b) * d.as_ref().expect("extension present"));
        }
        let b = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
        QuadElem { a, b, d }
    }
}

impl std::ops::Neg for &QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem {
            a: -&self.a,
            b: -&self.b,
            d: self.d.clone(),
        }
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.d, self.b.is_zero()) {
            (Some(d), false) => write!(f, "({}) + ({})*sqrt({})", self.a, self.b, d),
            _ => write!(f, "{}", self.a),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn r(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn arithmetic_in_an_extension() {
        let f = CycloField::new(20);
        let c5 = CycloElem::cos_pi_over(&f, 5);
        // D = (7 + √5)/2 with √5 = 4cos(π/5) - 1.
        let sqrt5 = &c5.scale(&r(4, 1)) - &CycloElem::one(&f);
        let d = (&CycloElem::integer(&f, 7) + &sqrt5).scale(&r(1, 2));
        let d = Arc::new(d);
        let zero = CycloElem::zero(&f);
        let half = CycloElem::rational(&f, r(1, 2));
        let x = QuadElem::new(zero, half, d.clone());
        assert!((x.to_f64() - 1.074_481_3).abs() < 1e-6);
        // x² = (7 + √5)/8 lies in K.
        let sq = &x * &x;
        assert_eq!(sq.base().unwrap(), &d.scale(&r(1, 4)));
        let inv = x.inverse().unwrap();
        assert_eq!((&x * &inv).base().unwrap().as_rational(), Some(r(1, 1)));
        assert_eq!((-&x).sign(), Ordering::Less);
    }

    #[test]
    fn square_radicands_collapse() {
        let f = CycloField::new(20);
        let sqrt5 = CycloElem::sqrt_int(&f, 5);
        // D = 5 is a square in K: 1 + √5 and √5 - 1 as `a + b√D`.
        let d = Arc::new(CycloElem::integer(&f, 5));
        let one = CycloElem::one(&f);
        let x = QuadElem::new(one.clone(), one.clone(), d.clone());
        assert!(!x.is_zero());
        assert_eq!(x.sign(), Ordering::Greater);
        let y = QuadElem::new(-&sqrt5, one.clone(), d.clone());
        assert!(y.is_zero());
        assert!(y.inverse().is_none());
        let z = QuadElem::new(sqrt5.clone(), one.clone(), d);
        let inv = z.inverse().unwrap();
        assert!((inv.to_f64() - 1.0 / (2.0 * 5f64.sqrt())).abs() < 1e-12);
    }
}
