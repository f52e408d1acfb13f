//! Salem, Pisot, and Perron tests for a real root `τ > 1`.
//!
//! Every test runs on the cyclotomic-free square-free part `q` of the input
//! polynomial. Conjugates of `τ` are among the roots of `q`, so a positive
//! answer is a proof. A negative answer is exact for `q` but says nothing
//! about a proper factor of `q`; irreducibility is not certified.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use super::disk::{count_in_disk, count_in_unit_disk};
use super::sturm::SturmChain;
use super::{is_self_reciprocal, isolate_real_roots, strip_cyclotomic, IsolatedRoot, RootError, SelfReciprocity};
use crate::poly::IntPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certification {
    /// Decided by exact arithmetic on the stripped polynomial.
    Exact,
    /// Not settled by the exact procedures; the flag is a best guess.
    Heuristic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub certification: Certification,
}

impl Verdict {
    fn exact(holds: bool) -> Self {
        Self {
            holds,
            certification: Certification::Exact,
        }
    }

    fn heuristic(holds: bool) -> Self {
        Self {
            holds,
            certification: Certification::Heuristic,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NumberClass {
    pub salem: Verdict,
    pub pisot: Verdict,
    pub perron: Verdict,
    /// The stripped polynomial is monic up to sign.
    pub monic: bool,
    /// Cyclotomic factors removed before testing.
    pub stripped_cyclotomic: Vec<(usize, u32)>,
    /// The cyclotomic-free square-free polynomial that was tested.
    pub tested_polynomial: IntPolynomial,
    pub reciprocity: SelfReciprocity,
    pub scope: &'static str,
}

impl NumberClass {
    /// Names of the properties that hold, e.g. `["salem", "perron"]`.
    pub fn flags(&self) -> Vec<&'static str> {
        [("salem", self.salem), ("pisot", self.pisot), ("perron", self.perron)]
            .into_iter()
            .filter(|(_, v)| v.holds)
            .map(|(n, _)| n)
            .collect()
    }
}

const SCOPE: &str = "tests apply to the cyclotomic-free square-free part; irreducibility is not certified";

/// Trace polynomial `T` with `q(t) = t^d · T(t + 1/t)` for palindromic `q`
/// of degree `2d`.
pub(crate) fn trace_polynomial(q: &IntPolynomial) -> Option<IntPolynomial> {
    let n = q.degree()?;
    if n % 2 != 0 || q.self_reciprocity() != Some(1) {
        return None;
    }
    let d = n / 2;
    let x = IntPolynomial::t();
    // v_k = t^k + t^{-k} as a polynomial in x = t + 1/t.
    let mut v_prev = IntPolynomial::from_i64(&[2]);
    let mut v = x.clone();
    let mut out = IntPolynomial::constant(q.coeff(d));
    for k in 1..=d {
        out = &out + &v.scale(&q.coeff(d + k));
        let next = &(&x * &v) - &v_prev;
        v_prev = std::mem::replace(&mut v, next);
    }
    Some(out)
}

fn salem_test(q: &IntPolynomial) -> bool {
    let n = q.degree_or_zero();
    if n < 4 || q.leading().abs() != BigInt::one() {
        return false;
    }
    let Some(t) = trace_polynomial(q) else {
        return false;
    };
    let two = BigRational::from_integer(2.into());
    let m_two = -two.clone();
    if t.sign_at(&two) == Ordering::Equal || t.sign_at(&m_two) == Ordering::Equal {
        return false;
    }
    let chain = SturmChain::new(&t);
    let d = t.degree_or_zero();
    // x = τ + 1/τ > 2 once; every other x in (-2, 2) gives a unit-circle pair.
    chain.count(Some(&two), None) == 1
        && chain.count(Some(&m_two), Some(&two)) == d - 1
        && chain.count(None, Some(&m_two)) == 0
}

/// Locate `τ` as a root of `q`, with an interval isolating it for `q`.
fn relocate(q: &IntPolynomial, root: &IsolatedRoot) -> Result<IsolatedRoot, RootError> {
    let g = q.gcd(root.defining_poly()).expect("nonzero polynomials");
    if g.degree_or_zero() == 0
        || g.sign_at(root.lo()) == Ordering::Equal
        || g.sign_at(root.hi()) == Ordering::Equal
        || SturmChain::new(&g).count(Some(root.lo()), Some(root.hi())) != 1
    {
        return Err(RootError::Precondition(
            "the root is not a root of the tested polynomial".into(),
        ));
    }
    let mid = root.midpoint();
    isolate_real_roots(q)?
        .into_iter()
        .find(|r| {
            // The isolating intervals of q are disjoint; pick the one whose
            // interval meets the given root's interval at the common root.
            r.lo() < root.hi() && root.lo() < r.hi() && {
                let lo = r.lo().max(root.lo()).clone();
                let hi = r.hi().min(root.hi()).clone();
                lo < hi
                    && g.sign_at(&lo) != Ordering::Equal
                    && g.sign_at(&hi) != Ordering::Equal
                    && SturmChain::new(&g).count(Some(&lo), Some(&hi)) == 1
            }
        })
        .ok_or_else(|| RootError::Precondition(format!("no root of q near {mid}")))
}

fn perron_test(q: &IntPolynomial, tau: &IsolatedRoot) -> Verdict {
    let n = q.degree_or_zero();
    // -τ is a root iff it is a common root of q(t) and q(-t).
    let sym = q.gcd(&q.negate_variable()).expect("nonzero polynomial");
    let mut tau = tau.clone();
    let sixteen = BigRational::from_integer(16.into());
    for _ in 0..16 {
        if sym.degree_or_zero() > 0
            && sym.sign_at(tau.lo()) != Ordering::Equal
            && sym.sign_at(tau.hi()) != Ordering::Equal
            && SturmChain::new(&sym).count(Some(tau.lo()), Some(tau.hi())) == 1
        {
            return Verdict::exact(false);
        }
        let inside = count_in_disk(q, tau.lo()).expect("positive radius");
        if inside.inside == n - 1 {
            return Verdict::exact(true);
        }
        let outer = count_in_disk(q, tau.hi()).expect("positive radius");
        if outer.outside > 0 {
            return Verdict::exact(false);
        }
        let w = tau.width() / &sixteen;
        tau.refine(&w);
    }
    // Another root lies extremely close to the circle |z| = τ.
    Verdict::heuristic(false)
}

/// Classify `root` (which must exceed 1 and be a root of `p`).
pub fn classify_number(p: &IntPolynomial, root: &IsolatedRoot) -> Result<NumberClass, RootError> {
    if p.degree_or_zero() == 0 {
        return Err(RootError::Precondition("constant polynomial".into()));
    }
    let stripped = strip_cyclotomic(&p.square_free_part());
    let q = stripped.remainder.primitive_part();
    if q.degree_or_zero() == 0 {
        return Err(RootError::Precondition("polynomial is a product of cyclotomics".into()));
    }
    let mut tau = relocate(&q, root)?;
    let one = BigRational::one();
    while tau.lo() < &one {
        if tau.hi() <= &one {
            return Err(RootError::Precondition("the root must exceed 1".into()));
        }
        let w = tau.width() / BigRational::from_integer(2.into());
        tau.refine(&w);
    }
    let monic = q.leading().abs() == BigInt::one();
    let reciprocity = is_self_reciprocal(&q);
    let n = q.degree_or_zero();

    let (salem, pisot, perron) = if monic {
        let unit = count_in_unit_disk(&q);
        let pisot = unit.outside == 1 && unit.on == 0 && unit.inside == n - 1;
        (
            Verdict::exact(salem_test(&q)),
            Verdict::exact(pisot),
            perron_test(&q, &tau),
        )
    } else {
        let f = Verdict::heuristic(false);
        (f, f, f)
    };
    Ok(NumberClass {
        salem,
        pisot,
        perron,
        monic,
        stripped_cyclotomic: stripped.factors,
        tested_polynomial: q,
        reciprocity,
        scope: SCOPE,
    })
}
