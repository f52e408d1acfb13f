use std::cmp::Ordering;

use num_rational::BigRational;

use super::RootError;
use crate::poly::IntPolynomial;

/// Generalised Sturm sequence `f_0, f_1, -prem(f_0, f_1), …` built with
/// sign-preserving pseudo-remainders.
#[derive(Clone, Debug)]
pub struct SturmChain {
    polys: Vec<IntPolynomial>,
}

impl SturmChain {
    /// Classic chain `p, p', …`.
    pub fn new(p: &IntPolynomial) -> Self {
        Self::from_pair(p, &p.derivative())
    }

    /// Chain starting from an arbitrary pair; `V(-∞) - V(+∞)` is then the
    /// Cauchy index of `f1/f0` over the real line.
    pub fn from_pair(f0: &IntPolynomial, f1: &IntPolynomial) -> Self {
        let mut polys = vec![f0.clone()];
        if f1.is_zero() {
            return Self { polys };
        }
        polys.push(f1.clone());
        loop {
            let n = polys.len();
            let r = polys[n - 2]
                .pseudo_rem(&polys[n - 1])
                .expect("chain members are nonzero");
            if r.is_zero() {
                break;
            }
            // Divide by the positive content only, keeping the sign.
            let c = r.content();
            let next = IntPolynomial::new(r.coeffs().iter().map(|a| -(a / &c)).collect());
            polys.push(next);
        }
        Self { polys }
    }

    pub fn polys(&self) -> &[IntPolynomial] {
        &self.polys
    }

    fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for s in signs.filter(|s| *s != Ordering::Equal) {
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Sign variations at `x`, with `None` meaning `-∞` or `+∞` according
    /// to `upper`.
    pub fn variations_at(&self, x: Option<&BigRational>, upper: bool) -> usize {
        match x {
            Some(x) => Self::variations(self.polys.iter().map(|p| p.sign_at(x))),
            None if upper => Self::variations(self.polys.iter().map(IntPolynomial::sign_at_pos_infinity)),
            None => Self::variations(self.polys.iter().map(IntPolynomial::sign_at_neg_infinity)),
        }
    }

    /// Number of distinct real roots of `f_0` in `(lo, hi)` for a classic
    /// chain; `None` bounds are infinite.
    pub fn count(&self, lo: Option<&BigRational>, hi: Option<&BigRational>) -> usize {
        let a = self.variations_at(lo, false);
        let b = self.variations_at(hi, true);
        a.saturating_sub(b)
    }

    /// Cauchy index of `f_1/f_0` over the real line.
    pub fn cauchy_index(&self) -> i64 {
        self.variations_at(None, false) as i64 - self.variations_at(None, true) as i64
    }
}

/// Number of distinct real roots of `p` in the open interval `(lo, hi)`.
/// `None` stands for an infinite endpoint. Finite endpoints must not be roots.
pub fn sturm_count(
    p: &IntPolynomial,
    lo: Option<&BigRational>,
    hi: Option<&BigRational>,
) -> Result<usize, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    for x in [lo, hi].into_iter().flatten() {
        if p.sign_at(x) == Ordering::Equal {
            return Err(RootError::RootAtEndpoint(x.to_string()));
        }
    }
    if let (Some(a), Some(b)) = (lo, hi) {
        if a >= b {
            return Err(RootError::Precondition(format!("empty interval ({a}, {b})")));
        }
    }
    Ok(SturmChain::new(p).count(lo, hi))
}
