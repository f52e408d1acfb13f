//! Growth series via Steinberg's formula.
//!
//! For a Coxeter system `(W, S)`,
//!
//! ```text
//! 1 / f_S(1/t) = Σ_{T ⊆ S, W_T finite} (-1)^{|T|} / f_T(t)
//! ```
//!
//! where `f_T` is the Solomon polynomial of the finite parabolic subgroup
//! `W_T`. Every `f_T` is a product of cyclotomic polynomials, so the sum is
//! accumulated over the exact least common multiple of the denominators,
//! kept as a vector of cyclotomic exponents.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::diagram::{census, enumerate_elliptic_subsets, Census, DiagramError, EllipticSubset};
use crate::graph::VinbergGraph;
use crate::poly::{cyclotomic, IntPolynomial, PolyError, RationalFunction};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrowthError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("the Steinberg sum vanishes identically")]
    ZeroSteinbergSum,
}

/// One grouped term `coefficient / [k_1, …, k_r]` of the Steinberg sum.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SteinbergTerm {
    pub coefficient: i64,
    /// Sorted bracket arguments `m_i + 1` over all components.
    pub brackets: Vec<usize>,
}

/// Terms grouped by their bracket lists, in order of `(|T|, brackets)`.
pub fn steinberg_terms(subsets: &[EllipticSubset]) -> Vec<SteinbergTerm> {
    let mut groups: BTreeMap<(usize, Vec<usize>), i64> = BTreeMap::new();
    for s in subsets {
        let mut brackets: Vec<usize> = s
            .components
            .iter()
            .flat_map(|c| c.exponents().expect("spherical component"))
            .map(|m| m as usize + 1)
            .collect();
        brackets.sort_unstable();
        *groups.entry((s.len(), brackets)).or_insert(0) += i64::from(s.sign());
    }
    groups
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|((_, brackets), coefficient)| SteinbergTerm {
            coefficient,
            brackets,
        })
        .collect()
}

/// Human-readable sum such as `1 - 4/[2] + 3/[2,2] + 1/[2,3]`.
pub fn format_steinberg_terms(terms: &[SteinbergTerm]) -> String {
    let mut out = String::new();
    for (k, term) in terms.iter().enumerate() {
        let c = term.coefficient;
        let sign = if c < 0 { "-" } else { "+" };
        if k == 0 {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        if term.brackets.is_empty() {
            out.push_str(&c.abs().to_string());
        } else {
            let list: Vec<String> = term.brackets.iter().map(usize::to_string).collect();
            out.push_str(&format!("{}/[{}]", c.abs(), list.join(",")));
        }
    }
    out
}

fn cyclotomic_product(profile: &BTreeMap<usize, u32>) -> IntPolynomial {
    profile
        .iter()
        .filter(|(_, &e)| e > 0)
        .fold(IntPolynomial::one(), |acc, (&d, &e)| &acc * &cyclotomic(d).pow(e))
}

/// Steinberg sum of a list of elliptic subsets, reduced.
pub(crate) fn steinberg_sum_of(subsets: &[EllipticSubset]) -> Result<RationalFunction, GrowthError> {
    // Group subsets by cyclotomic profile so each cofactor is built once.
    let mut by_profile: BTreeMap<BTreeMap<usize, u32>, BigInt> = BTreeMap::new();
    for s in subsets {
        *by_profile.entry(s.cyclotomic_profile()).or_insert_with(BigInt::zero) +=
            BigInt::from(s.sign());
    }
    by_profile.retain(|_, c| !c.is_zero());

    let mut lcm: BTreeMap<usize, u32> = BTreeMap::new();
    for profile in by_profile.keys() {
        for (&d, &e) in profile {
            let slot = lcm.entry(d).or_insert(0);
            *slot = (*slot).max(e);
        }
    }

    let mut numerator = IntPolynomial::zero();
    for (profile, count) in &by_profile {
        let cofactor: BTreeMap<usize, u32> = lcm
            .iter()
            .map(|(&d, &e)| (d, e - profile.get(&d).copied().unwrap_or(0)))
            .collect();
        numerator = &numerator + &cyclotomic_product(&cofactor).scale(count);
    }
    if numerator.is_zero() {
        return Err(GrowthError::ZeroSteinbergSum);
    }

    // The denominator is a product of cyclotomics, so cancelling them one by
    // one yields the reduced form without a general gcd.
    for (&d, e) in lcm.iter_mut() {
        let phi = cyclotomic(d);
        while *e > 0 {
            match numerator.exact_div(&phi) {
                Some(q) => {
                    numerator = q;
                    *e -= 1;
                }
                None => break,
            }
        }
    }
    Ok(RationalFunction::from_coprime(numerator, cyclotomic_product(&lcm))?)
}

/// `G(t) = Σ (-1)^{|T|} / f_T(t)`, which equals `1/f_S(1/t)`.
pub fn steinberg_sum(g: &VinbergGraph) -> Result<RationalFunction, GrowthError> {
    let subsets = enumerate_elliptic_subsets(&g.coxeter_matrix(), crate::diagram::DEFAULT_RANK_BOUND)?;
    steinberg_sum_of(&subsets)
}

/// Growth series `f_S(t) = Σ a_k t^k` as a reduced rational function with
/// `f(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthSeries {
    function: RationalFunction,
    rank: usize,
    census: Census,
    terms: Vec<SteinbergTerm>,
}

impl GrowthSeries {
    /// Growth series of a rational function already normalised to `f(0) = 1`.
    pub fn from_function(function: RationalFunction, rank: usize) -> Self {
        Self {
            function,
            rank,
            census: census(&[]),
            terms: Vec::new(),
        }
    }

    pub fn function(&self) -> &RationalFunction {
        &self.function
    }

    pub fn numerator(&self) -> &IntPolynomial {
        self.function.numerator()
    }

    pub fn denominator(&self) -> &IntPolynomial {
        self.function.denominator()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Elliptic-subset census used to build the series.
    pub fn census(&self) -> &Census {
        &self.census
    }

    /// SHA-256 digest of the census.
    pub fn census_hash(&self) -> &str {
        &self.census.hash
    }

    /// Grouped Steinberg terms.
    pub fn steinberg_terms(&self) -> &[SteinbergTerm] {
        &self.terms
    }

    /// True when the group is finite (the series is a polynomial).
    pub fn is_polynomial(&self) -> bool {
        self.function.denominator().is_one()
    }
}

impl fmt::Display for GrowthSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.function)
    }
}

pub fn growth_series(g: &VinbergGraph) -> Result<GrowthSeries, GrowthError> {
    let m = g.coxeter_matrix();
    let subsets = enumerate_elliptic_subsets(&m, crate::diagram::DEFAULT_RANK_BOUND)?;
    let sum = steinberg_sum_of(&subsets)?;
    let function = sum.invert_variable_recip()?;
    debug_assert_eq!(
        function.numerator().constant_term(),
        function.denominator().constant_term()
    );
    Ok(GrowthSeries {
        function,
        rank: g.rank(),
        census: census(&subsets),
        terms: steinberg_terms(&subsets),
    })
}

/// Coefficients `a_0, …, a_K` of the power series of `f`, from the linear
/// recurrence given by the denominator.
pub fn series_coefficients(f: &RationalFunction, k: usize) -> Vec<BigInt> {
    let p = f.numerator();
    let q = f.denominator();
    let q0 = q.constant_term();
    assert!(!q0.is_zero(), "series must be regular at t = 0");
    let qd = q.degree_or_zero();
    let mut a: Vec<BigInt> = Vec::with_capacity(k + 1);
    for n in 0..=k {
        let mut s = p.coeff(n);
        for j in 1..=qd.min(n) {
            s -= q.coeff(j) * &a[n - j];
        }
        debug_assert!((&s % &q0).is_zero(), "integral series");
        a.push(s / &q0);
    }
    a
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reciprocity {
    Reciprocal,
    AntiReciprocal,
    Neither,
}

impl fmt::Display for Reciprocity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reciprocity::Reciprocal => "reciprocal",
            Reciprocity::AntiReciprocal => "anti-reciprocal",
            Reciprocity::Neither => "neither",
        })
    }
}

/// Compare `f(1/t)` with `±f(t)` by coefficient reversal.
pub fn reciprocity_type(f: &RationalFunction) -> Reciprocity {
    let (p, q) = (f.numerator(), f.denominator());
    let d = p.degree_or_zero().max(q.degree_or_zero());
    // f(1/t) = rev_d(p) / rev_d(q)
    let lhs = &p.reversed(d) * q;
    let rhs = p * &q.reversed(d);
    if lhs == rhs {
        Reciprocity::Reciprocal
    } else if lhs == -rhs {
        Reciprocity::AntiReciprocal
    } else {
        Reciprocity::Neither
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum EulerCharacteristic {
    /// `1/f(1)`.
    Value { value: String },
    /// `f` has a pole at `t = 1` of the given order.
    Zero { pole_order: usize },
}

impl EulerCharacteristic {
    pub fn rational(&self) -> BigRational {
        match self {
            EulerCharacteristic::Value { value } => value.parse().expect("stored rational"),
            EulerCharacteristic::Zero { .. } => BigRational::zero(),
        }
    }
}

impl fmt::Display for EulerCharacteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EulerCharacteristic::Value { value } => f.write_str(value),
            EulerCharacteristic::Zero { pole_order } => {
                write!(f, "0 (pole of order {pole_order} at t = 1)")
            }
        }
    }
}

/// `χ = 1/f(1)`, computed exactly.
pub fn euler_characteristic(f: &RationalFunction) -> EulerCharacteristic {
    let pole = f.denominator().multiplicity_at_one();
    if pole > 0 {
        return EulerCharacteristic::Zero { pole_order: pole };
    }
    let num = f.numerator().value_at_one();
    let den = f.denominator().value_at_one();
    debug_assert!(!num.is_zero(), "growth series do not vanish at 1");
    let chi = BigRational::new(den, num);
    EulerCharacteristic::Value {
        value: if chi.is_integer() {
            chi.numer().to_string()
        } else {
            format!("{}/{}", chi.numer(), chi.denom())
        },
    }
}

/// Recompute `1/f(1)` as `Σ (-1)^{|T|}/|W_T|`, as an independent check.
pub fn euler_characteristic_from_subsets(subsets: &[EllipticSubset]) -> BigRational {
    subsets.iter().fold(BigRational::zero(), |acc, s| {
        let order: BigInt = s
            .components
            .iter()
            .map(|c| BigInt::from(c.group_order().expect("spherical component")))
            .fold(BigInt::one(), |a, b| a * b);
        acc + BigRational::new(BigInt::from(s.sign()), order)
    })
}

#[cfg(test)]
mod tests;
