//! The partial order on Coxeter systems, growth-rate monotonicity checks,
//! and the minimality comparisons in dimensions four and five.

mod report;

pub use report::{help_function, matches_printed, minimality_report, Check, MinimalityReport, NamedRate, ReportStep};

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{CoxeterMatrix, Order, VinbergGraph};
use crate::growth::{growth_series, GrowthError};
use crate::roots::{growth_rate, IsolatedRoot, RootError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderError {
    #[error(transparent)]
    Growth(#[from] GrowthError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("no weight-compatible embedding of the smaller system")]
    NoEmbedding,
    #[error("growth rate {small} of the smaller system exceeds {large}")]
    MonotonicityViolated { small: String, large: String },
    #[error("minimality report supports dimensions 4 and 5, not {0}")]
    UnsupportedDimension(usize),
}

/// An injective map `ι` with `m_st ≤ m'_{ι(s)ι(t)}` for all `s ≠ t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartialOrderWitness {
    /// `map[s] = ι(s)`, 0-based.
    pub map: Vec<usize>,
    /// The systems are not isomorphic through `ι`.
    pub strict: bool,
}

impl PartialOrderWitness {
    /// Re-check every pairwise inequality.
    pub fn verify(&self, small: &CoxeterMatrix, large: &CoxeterMatrix) -> bool {
        let n = self.map.len();
        let mut seen = vec![false; large.rank()];
        for &v in &self.map {
            if v >= large.rank() || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        (0..n).all(|s| (s + 1..n).all(|t| small.order(s, t) <= large.order(self.map[s], self.map[t])))
    }

    /// `ι₂ ∘ ι₁`.
    pub fn compose(&self, then: &PartialOrderWitness) -> PartialOrderWitness {
        PartialOrderWitness {
            map: self.map.iter().map(|&v| then.map[v]).collect(),
            strict: self.strict || then.strict,
        }
    }
}

fn nontrivial_degree(m: &CoxeterMatrix, v: usize) -> usize {
    (0..m.rank()).filter(|&u| u != v && m.order(u, v) > Order::Finite(2)).count()
}

fn max_weight(m: &CoxeterMatrix, v: usize) -> Order {
    (0..m.rank())
        .filter(|&u| u != v)
        .map(|u| m.order(u, v))
        .max()
        .unwrap_or(Order::Finite(2))
}

/// Lexicographically first witness of `small ≤ large`, by backtracking with
/// degree and maximum-weight pruning.
pub fn find_embedding(small: &CoxeterMatrix, large: &CoxeterMatrix) -> Option<PartialOrderWitness> {
    let (n, big) = (small.rank(), large.rank());
    if n > big {
        return None;
    }
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|s| {
            let (deg, top) = (nontrivial_degree(small, s), max_weight(small, s));
            (0..big)
                .filter(|&v| nontrivial_degree(large, v) >= deg && max_weight(large, v) >= top)
                .collect()
        })
        .collect();
    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; big];
    if !extend(small, large, &candidates, &mut map, &mut used) {
        return None;
    }
    let strict = n < big || (0..n).any(|s| (s + 1..n).any(|t| small.order(s, t) < large.order(map[s], map[t])));
    Some(PartialOrderWitness { map, strict })
}

fn extend(
    small: &CoxeterMatrix,
    large: &CoxeterMatrix,
    candidates: &[Vec<usize>],
    map: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let s = map.len();
    if s == candidates.len() {
        return true;
    }
    for &v in &candidates[s] {
        if used[v] || !(0..s).all(|t| small.order(t, s) <= large.order(map[t], v)) {
            continue;
        }
        used[v] = true;
        map.push(v);
        if extend(small, large, candidates, map, used) {
            return true;
        }
        map.pop();
        used[v] = false;
    }
    false
}

/// Growth rate of a Coxeter system. Finite and affine-type systems grow at
/// most polynomially and are assigned the value 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Rate {
    Finite,
    Subexponential,
    Exponential { tau: IsolatedRoot },
}

/// Width to which rates are refined for reporting.
pub fn report_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u64).pow(12))
}

impl Rate {
    pub fn of(g: &VinbergGraph) -> Result<Rate, OrderError> {
        let f = growth_series(g)?;
        match growth_rate(f.function(), &report_width()) {
            Ok(r) => Ok(Rate::Exponential { tau: r.tau }),
            Err(RootError::FiniteGroup) => Ok(Rate::Finite),
            Err(RootError::NotExponential) => Ok(Rate::Subexponential),
            Err(e) => Err(e.into()),
        }
    }

    pub fn tau(&self) -> Option<&IsolatedRoot> {
        match self {
            Rate::Exponential { tau } => Some(tau),
            _ => None,
        }
    }

    /// Enclosure `[lo, hi]` of the rate.
    pub fn bounds(&self) -> (BigRational, BigRational) {
        match self {
            Rate::Exponential { tau } => (tau.lo().clone(), tau.hi().clone()),
            _ => (BigRational::one(), BigRational::one()),
        }
    }

    pub fn compare(&self, other: &Rate) -> Ordering {
        match (self.tau(), other.tau()) {
            (Some(a), Some(b)) => a.compare(b),
            (Some(a), None) => a.compare_rational(&BigRational::one()),
            (None, Some(b)) => b.compare_rational(&BigRational::one()).reverse(),
            (None, None) => Ordering::Equal,
        }
    }

    pub fn compare_rational(&self, r: &BigRational) -> Ordering {
        match self.tau() {
            Some(t) => t.compare_rational(r),
            None => BigRational::one().cmp(r),
        }
    }

    pub fn to_decimal(&self, digits: usize) -> String {
        match self.tau() {
            Some(t) => t.to_decimal(digits),
            None => crate::roots::format_decimal(&BigRational::one(), digits),
        }
    }
}

impl fmt::Display for Rate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(8))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MonotoneCheck {
    pub witness: PartialOrderWitness,
    pub small: Rate,
    pub large: Rate,
    /// `"less"` or `"equal"`, decided exactly.
    pub relation: &'static str,
}

/// Check `τ_small ≤ τ_large` for `small ≤ large`. A violation is an error:
/// it would contradict monotonicity of growth rates under the order.
pub fn assert_growth_monotone(small: &VinbergGraph, large: &VinbergGraph) -> Result<MonotoneCheck, OrderError> {
    let witness = find_embedding(&small.coxeter_matrix(), &large.coxeter_matrix()).ok_or(OrderError::NoEmbedding)?;
    let (a, b) = (Rate::of(small)?, Rate::of(large)?);
    let relation = match a.compare(&b) {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => {
            return Err(OrderError::MonotonicityViolated {
                small: a.to_string(),
                large: b.to_string(),
            })
        }
    };
    Ok(MonotoneCheck {
        witness,
        small: a,
        large: b,
        relation,
    })
}
