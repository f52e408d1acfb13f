//! Gram matrices of Vinberg graphs, certified signatures, compactness via
//! vertex links, and edge lengths of prisms from a vanishing determinant.

mod cyclo;
mod interval;
mod quad;

pub use cyclo::{field_order, CycloElem, CycloField};
pub use interval::{cos_pi_frac, pi, Interval};
pub use quad::QuadElem;


use std::cmp::Ordering;
use std::sync::Arc;

use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use crate::diagram::{enumerate_elliptic_subsets, DiagramError, DEFAULT_RANK_BOUND};
use crate::graph::{EdgeLabel, VinbergGraph};

pub const DEFAULT_PRECISION_BITS: u32 = 128;
const MAX_PRECISION_BITS: u32 = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("graph rank {rank} is below the dimension {dimension}")]
    RankBelowDimension { rank: usize, dimension: usize },
    #[error("expected exactly one dotted edge without a distance, found {0}")]
    UnknownDistanceCount(usize),
    #[error("no root with cosh l > 1")]
    NoAdmissibleLength,
}

/// An entry of the Gram matrix fixed by a vanishing principal minor.
#[derive(Clone, Debug)]
pub struct SolvedEntry {
    pub i: usize,
    pub j: usize,
    pub value: Interval,
}

/// `Gr(P)` with exact entries `1`, `-cos(π/m)`, `-cosh l`, or `-1` for a
/// dotted edge without a distance.
#[derive(Clone, Debug)]
pub struct GramMatrix {
    field: Arc<CycloField>,
    entries: Vec<Vec<QuadElem>>,
    /// Dotted edges without a distance, entered as `-1`.
    defaulted: Vec<(usize, usize)>,
    solved: Option<SolvedEntry>,
}

pub fn gram_matrix(g: &VinbergGraph) -> GramMatrix {
    let orders = g.edges().filter_map(|(_, _, l)| match l {
        EdgeLabel::Finite(m) => Some(*m),
        EdgeLabel::Dotted(_) => None,
    });
    let radicands: Vec<u64> = g
        .dotted_edges()
        .filter_map(|(_, _, c)| c.map(|c| c.radicand()))
        .collect();
    let field = CycloField::new(field_order(orders, radicands));
    let n = g.rank();
    let mut entries = vec![vec![CycloElem::zero(&field); n]; n];
    let mut defaulted = Vec::new();
    for (i, row) in entries.iter_mut().enumerate() {
        row[i] = CycloElem::one(&field);
    }
    for (i, j, label) in g.edges() {
        let v = match label {
            EdgeLabel::Finite(m) => -&CycloElem::cos_pi_over(&field, *m),
            EdgeLabel::Dotted(Some(c)) => {
                let (a, b) = c.rational_parts();
                let s = CycloElem::sqrt_int(&field, c.radicand());
                -&(&CycloElem::rational(&field, a) + &s.scale(&b))
            }
            EdgeLabel::Dotted(None) => {
                defaulted.push((i, j));
                CycloElem::integer(&field, -1)
            }
        };
        entries[i][j] = v.clone();
        entries[j][i] = v;
    }
    GramMatrix {
        field,
        entries: entries
            .into_iter()
            .map(|r| r.into_iter().map(QuadElem::from).collect())
            .collect(),
        defaulted,
        solved: None,
    }
}

impl GramMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn entry(&self, i: usize, j: usize) -> &QuadElem {
        &self.entries[i][j]
    }

    pub fn defaulted_edges(&self) -> &[(usize, usize)] {
        &self.defaulted
    }

    pub fn solved_entry(&self) -> Option<&SolvedEntry> {
        self.solved.as_ref()
    }

    /// Interval table at `bits` of precision.
    pub fn intervals(&self, bits: u32) -> Vec<Vec<Interval>> {
        let n = self.size();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.entries[i][j].real_interval(bits))
                    .collect()
            })
            .collect()
    }

    pub fn determinant(&self) -> QuadElem {
        exact_determinant(self.entries.clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SignatureResult {
    pub positives: usize,
    pub negatives: usize,
    pub zeros: usize,
    pub certified: bool,
    pub precision_used: u32,
}

impl SignatureResult {
    pub fn triple(&self) -> (usize, usize, usize) {
        (self.positives, self.negatives, self.zeros)
    }
}

/// Inertia of a symmetric matrix with exact entries, by symmetric
/// elimination with exact zero tests.
fn exact_inertia(mut a: Vec<Vec<QuadElem>>) -> (usize, usize, usize) {
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    let mut active: Vec<usize> = (0..a.len()).collect();
    while !active.is_empty() {
        if let Some(k) = active.iter().position(|&i| !a[i][i].is_zero()) {
            let p = active.remove(k);
            let d = a[p][p].clone();
            match d.sign() {
                Ordering::Greater => pos += 1,
                _ => neg += 1,
            }
            let inv = d.inverse().expect("nonzero pivot");
            for &r in &active {
                if a[r][p].is_zero() {
                    continue;
                }
                let f = &a[r][p] * &inv;
                for &s in &active {
                    let upd = &f * &a[p][s];
                    a[r][s] = &a[r][s] - &upd;
                }
            }
            continue;
        }
        // Zero diagonal: a nonzero off-diagonal pair gives a hyperbolic 2×2
        // block of inertia (1, 1).
        let pair = active.iter().enumerate().find_map(|(x, &i)| {
            active[x + 1..]
                .iter()
                .find(|&&j| !a[i][j].is_zero())
                .map(|&j| (i, j))
        });
        let Some((i, j)) = pair else {
            zero += active.len();
            break;
        };
        active.retain(|&v| v != i && v != j);
        pos += 1;
        neg += 1;
        let inv = a[i][j].inverse().expect("nonzero pivot");
        let rows: Vec<(usize, QuadElem, QuadElem)> =
            active.iter().map(|&r| (r, a[r][i].clone(), a[r][j].clone())).collect();
        for &(r, ref ri, ref rj) in &rows {
            for &(s, ref si, ref sj) in &rows {
                // A' = A - B E⁻¹ Bᵀ with E = [[0, b], [b, 0]].
                let t = &(&(ri * sj) + &(rj * si)) * &inv;
                a[r][s] = &a[r][s] - &t;
            }
        }
    }
    (pos, neg, zero)
}

fn exact_determinant<T>(mut a: Vec<Vec<T>>) -> T
where
    T: Clone + Exact,
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T> + std::ops::Sub<&'a T, Output = T> + std::ops::Neg<Output = T>,
{
    let n = a.len();
    let mut det = T::one_like(&a[0][0]);
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return T::zero_like(&a[0][0]);
        };
        if p != col {
            a.swap(p, col);
            det = -&det;
        }
        det = &det * &a[col][col];
        let inv = a[col][col].inverse_of().expect("nonzero pivot");
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            let (top, bottom) = a.split_at_mut(r);
            for (x, y) in bottom[0][col..n].iter_mut().zip(&top[col][col..n]) {
                *x = &*x - &(&f * y);
            }
        }
    }
    det
}

/// Exact scalars usable in elimination.
trait Exact: Sized {
    fn is_zero(&self) -> bool;
    fn inverse_of(&self) -> Option<Self>;
    fn one_like(x: &Self) -> Self;
    fn zero_like(x: &Self) -> Self;
}

impl Exact for CycloElem {
    fn is_zero(&self) -> bool {
        CycloElem::is_zero(self)
    }
    fn inverse_of(&self) -> Option<Self> {
        self.inverse()
    }
    fn one_like(x: &Self) -> Self {
        CycloElem::one(x.field())
    }
    fn zero_like(x: &Self) -> Self {
        CycloElem::zero(x.field())
    }
}

impl Exact for QuadElem {
    fn is_zero(&self) -> bool {
        QuadElem::is_zero(self)
    }
    fn inverse_of(&self) -> Option<Self> {
        self.inverse()
    }
    fn one_like(x: &Self) -> Self {
        CycloElem::one(x.field()).into()
    }
    fn zero_like(x: &Self) -> Self {
        CycloElem::zero(x.field()).into()
    }
}

/// Interval inertia with symmetric pivoting; `None` when some pivot cannot
/// be separated from zero at this precision.
fn interval_inertia(mut a: Vec<Vec<Interval>>, bits: u32) -> (usize, usize, usize, bool) {
    let (mut pos, mut neg) = (0, 0);
    let mut active: Vec<usize> = (0..a.len()).collect();
    while !active.is_empty() {
        let best = active
            .iter()
            .enumerate()
            .filter(|(_, &i)| a[i][i].sign().is_some_and(|s| s != Ordering::Equal))
            .max_by(|x, y| a[*x.1][*x.1].abs_max().cmp(&a[*y.1][*y.1].abs_max()))
            .map(|(k, _)| k);
        let Some(k) = best else {
            return (pos, neg, active.len(), false);
        };
        let p = active.remove(k);
        let d = a[p][p].clone();
        if d.sign() == Some(Ordering::Greater) {
            pos += 1;
        } else {
            neg += 1;
        }
        let inv = d.recip().expect("pivot excludes zero");
        for &r in &active {
            let f = &a[r][p] * &inv;
            for &s in &active {
                a[r][s] = (&a[r][s] - &(&f * &a[p][s])).rounded(bits);
            }
        }
    }
    (pos, neg, 0, true)
}

/// Signature of the Gram matrix by exact elimination over the entry field.
pub fn signature(g: &GramMatrix) -> SignatureResult {
    let (p, q, z) = exact_inertia(g.entries.clone());
    SignatureResult {
        positives: p,
        negatives: q,
        zeros: z,
        certified: true,
        precision_used: 0,
    }
}

/// Interval-only signature with precision doubling up to a cap.
pub fn interval_signature(g: &GramMatrix) -> SignatureResult {
    let mut bits = DEFAULT_PRECISION_BITS;
    loop {
        let (p, q, z, ok) = interval_inertia(g.intervals(bits), bits);
        if ok || bits >= MAX_PRECISION_BITS {
            return SignatureResult {
                positives: p,
                negatives: q,
                zeros: z,
                certified: ok,
                precision_used: bits,
            };
        }
        bits *= 2;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "verdict")]
pub enum Compactness {
    Compact,
    /// `witness` is the first elliptic subset of rank `n - 1` that does not
    /// extend to exactly two vertices, or empty when no vertex exists.
    NotCompact { witness: Vec<usize>, extensions: usize },
}

impl Compactness {
    pub fn is_compact(&self) -> bool {
        matches!(self, Compactness::Compact)
    }
}

/// Vertex-link test: there is a vertex, and every edge (elliptic subset of
/// rank `n - 1`) ends in exactly two vertices (elliptic subsets of rank `n`).
pub fn compactness_check(g: &VinbergGraph, n: usize) -> Result<Compactness, GeometryError> {
    if g.rank() < n {
        return Err(GeometryError::RankBelowDimension {
            rank: g.rank(),
            dimension: n,
        });
    }
    let subsets = enumerate_elliptic_subsets(&g.coxeter_matrix(), DEFAULT_RANK_BOUND)?;
    let vertices: std::collections::HashSet<&[usize]> = subsets
        .iter()
        .filter(|s| s.len() == n)
        .map(|s| s.nodes.as_slice())
        .collect();
    if vertices.is_empty() {
        return Ok(Compactness::NotCompact {
            witness: Vec::new(),
            extensions: 0,
        });
    }
    for s in subsets.iter().filter(|s| s.len() + 1 == n) {
        let extensions = (0..g.rank())
            .filter(|v| !s.nodes.contains(v))
            .filter(|&v| {
                let mut t = s.nodes.clone();
                t.push(v);
                t.sort_unstable();
                vertices.contains(t.as_slice())
            })
            .count();
        if extensions != 2 {
            return Ok(Compactness::NotCompact {
                witness: s.nodes.clone(),
                extensions,
            });
        }
    }
    Ok(Compactness::Compact)
}

/// Result of solving a vanishing principal minor for one unknown distance.
#[derive(Clone, Debug, Serialize)]
pub struct PrismLength {
    /// Nodes of the dotted edge (0-based).
    pub edge: (usize, usize),
    /// Enclosure of `cosh l`.
    pub cosh: Interval,
    /// `cosh l` in radicals over the field of the other entries.
    pub closed_form: String,
    /// Nodes of the principal minor that was solved; all nodes unless the
    /// full determinant vanishes identically.
    pub minor: Vec<usize>,
    /// The minor as `c0 + c1·x + c2·x²` in the unknown entry `x = -cosh l`.
    pub coefficients: [String; 3],
    /// The minor evaluated on the enclosure of `x`.
    pub determinant: Interval,
    pub precision_bits: u32,
    /// The Gram matrix with the solved entry in place.
    #[serde(skip)]
    pub gram: GramMatrix,
}

/// The minor on `keep` as a polynomial of degree at most two in the entry
/// `(i, j)`, by interpolation at `x = 0, ±1`.
fn minor_coefficients(base: &[Vec<CycloElem>], keep: &[usize], i: usize, j: usize) -> [CycloElem; 3] {
    let field = base[0][0].field().clone();
    let det_at = |x: i64| {
        let mut e: Vec<Vec<CycloElem>> = keep
            .iter()
            .map(|&r| keep.iter().map(|&c| base[r][c].clone()).collect())
            .collect();
        let (pi, pj) = (
            keep.iter().position(|&v| v == i).expect("i kept"),
            keep.iter().position(|&v| v == j).expect("j kept"),
        );
        e[pi][pj] = CycloElem::integer(&field, x);
        e[pj][pi] = CycloElem::integer(&field, x);
        exact_determinant(e)
    };
    let (d0, d1, dm1) = (det_at(0), det_at(1), det_at(-1));
    let half = BigRational::new(1.into(), 2.into());
    let c1 = (&d1 - &dm1).scale(&half);
    let c2 = &(&d1 + &dm1).scale(&half) - &d0;
    [d0, c1, c2]
}

/// Subsets of `pool` of size `k` in lexicographic order.
fn combinations(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (x, &v) in pool.iter().enumerate() {
        for mut rest in combinations(&pool[x + 1..], k - 1) {
            rest.insert(0, v);
            out.push(rest);
        }
    }
    out
}

/// Solve for the single dotted edge without a distance so that `Gr` has
/// signature `(n, 1, ·)`.
///
/// Every principal minor of size above `n + 1` vanishes at the true value.
/// The largest one that is not identically zero in the unknown entry
/// `x = -cosh l` is a polynomial of degree at most two; each root with
/// `cosh l > 1` is substituted and the one giving `n` positive and one
/// negative eigenvalue is returned.
pub fn solve_prism_length(g: &VinbergGraph, n: usize, precision_bits: u32) -> Result<PrismLength, GeometryError> {
    let unknown: Vec<(usize, usize)> = g
        .dotted_edges()
        .filter(|(_, _, c)| c.is_none())
        .map(|(i, j, _)| (i, j))
        .collect();
    if unknown.len() != 1 {
        return Err(GeometryError::UnknownDistanceCount(unknown.len()));
    }
    if g.rank() < n + 2 {
        return Err(GeometryError::RankBelowDimension {
            rank: g.rank(),
            dimension: n + 2,
        });
    }
    let (i, j) = unknown[0];
    let mut gram = gram_matrix(g);
    gram.defaulted.clear();
    let base: Vec<Vec<CycloElem>> = gram
        .entries
        .iter()
        .map(|r| r.iter().map(|e| e.base().expect("entries lie in the base field").clone()).collect())
        .collect();

    let others: Vec<usize> = (0..g.rank()).filter(|&v| v != i && v != j).collect();
    let mut found = None;
    'sizes: for drop in 0..=(g.rank() - n - 2) {
        for removed in combinations(&others, drop) {
            let keep: Vec<usize> = (0..g.rank()).filter(|v| !removed.contains(v)).collect();
            let c = minor_coefficients(&base, &keep, i, j);
            if c.iter().any(|e| !e.is_zero()) {
                found = Some((keep, c));
                break 'sizes;
            }
        }
    }
    let Some((minor, [c0, c1, c2])) = found else {
        return Err(GeometryError::NoAdmissibleLength);
    };

    let bits = precision_bits + 64;
    let four = BigRational::from_integer(4.into());
    let mut candidates: Vec<QuadElem> = Vec::new();
    if c2.is_zero() {
        if !c1.is_zero() {
            candidates.push((-&(&c0 * &c1.inverse().expect("nonzero"))).into());
        }
    } else {
        let disc = &(&c1 * &c1) - &(&c0 * &c2).scale(&four);
        let inv2c2 = c2.inverse().expect("nonzero").scale(&BigRational::new(1.into(), 2.into()));
        let a = -&(&c1 * &inv2c2);
        match disc.sign() {
            Ordering::Less => {}
            Ordering::Equal => candidates.push(a.into()),
            Ordering::Greater => {
                let d = Arc::new(disc);
                for b in [inv2c2.clone(), -&inv2c2] {
                    candidates.push(QuadElem::new(a.clone(), b, d.clone()));
                }
            }
        }
    }

    let minus_one: QuadElem = CycloElem::integer(&gram.field, -1).into();
    let mut admissible: Vec<(QuadElem, Interval)> = candidates
        .into_iter()
        .filter(|x| (&minus_one - x).sign() == Ordering::Greater)
        .map(|x| {
            let v = x.real_interval(bits);
            (x, v)
        })
        .collect();
    admissible.sort_by(|a, b| b.1.lo().cmp(a.1.lo()));
    for (x, v) in admissible {
        let mut trial = gram.clone();
        trial.entries[i][j] = x.clone();
        trial.entries[j][i] = x.clone();
        trial.solved = Some(SolvedEntry {
            i,
            j,
            value: v.clone(),
        });
        let sig = signature(&trial);
        if sig.positives != n || sig.negatives != 1 {
            continue;
        }
        let cosh = (-&v).rounded(precision_bits + 16);
        let vx = -&cosh;
        let determinant = &(&c0.real_interval(bits) + &(&c1.real_interval(bits) * &vx))
            + &(&(&c2.real_interval(bits) * &vx) * &vx);
        return Ok(PrismLength {
            edge: (i, j),
            closed_form: closed_form(&-&x),
            cosh,
            minor,
            coefficients: [c0.to_string(), c1.to_string(), c2.to_string()],
            determinant,
            precision_bits,
            gram: trial,
        });
    }
    Err(GeometryError::NoAdmissibleLength)
}

/// `a + sqrt(b²D)` form of `a + b√D`, pulling a positive `b` under the root.
fn closed_form(x: &QuadElem) -> String {
    match x.parts() {
        (a, None) => a.to_string(),
        (a, Some((b, d))) => {
            let under = &(b * b) * d;
            let sign = if b.sign() == Ordering::Less { "-" } else { "" };
            if a.is_zero() {
                format!("{sign}sqrt({under})")
            } else {
                let op = if sign.is_empty() { "+" } else { "-" };
                format!("{a} {op} sqrt({under})")
            }
        }
    }
}

/// Hyperbolic signature `(n, 1, rank - n - 1)` check with certification.
pub fn has_hyperbolic_signature(s: &SignatureResult, n: usize) -> bool {
    s.certified && s.positives == n && s.negatives == 1
}
