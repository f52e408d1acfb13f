use std::collections::BTreeMap;

use serde::Serialize;
use sha2::{Digest, Sha256};

use super::classify::classify_nodes;
use super::{DiagramError, DiagramType};
use crate::graph::{CoxeterMatrix, Order};
use crate::poly::IntPolynomial;

pub const DEFAULT_RANK_BOUND: usize = 25;

/// A generator subset whose parabolic subgroup is finite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EllipticSubset {
    /// Sorted node indices.
    pub nodes: Vec<usize>,
    /// Types of the connected components, sorted.
    pub components: Vec<DiagramType>,
}

impl EllipticSubset {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `(-1)^{|T|}`.
    pub fn sign(&self) -> i32 {
        if self.nodes.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn solomon_polynomial(&self) -> IntPolynomial {
        self.components.iter().fold(IntPolynomial::one(), |acc, c| {
            &acc * &c.solomon_polynomial().expect("elliptic components are spherical")
        })
    }

    /// Multiplicities of `Φ_d` in the Solomon polynomial.
    pub fn cyclotomic_profile(&self) -> BTreeMap<usize, u32> {
        let mut out = BTreeMap::new();
        for c in &self.components {
            for (d, e) in c.cyclotomic_profile().expect("elliptic components are spherical") {
                *out.entry(d).or_insert(0) += e;
            }
        }
        out
    }

    /// Component types joined by `x`, e.g. `A1xA2`; `1` for the empty set.
    pub fn type_label(&self) -> String {
        if self.components.is_empty() {
            return "1".into();
        }
        self.components
            .iter()
            .map(DiagramType::name)
            .collect::<Vec<_>>()
            .join("x")
    }
}

fn component_types(m: &CoxeterMatrix, nodes: &[usize]) -> Option<Vec<DiagramType>> {
    let mut types = Vec::new();
    for comp in m.components_of(nodes) {
        let t = classify_nodes(m, &comp);
        if !t.is_spherical() {
            return None;
        }
        types.push(t);
    }
    types.sort();
    Some(types)
}

/// True iff every component of the subdiagram on `subset` is spherical.
pub fn is_elliptic(m: &CoxeterMatrix, subset: &[usize]) -> bool {
    if subset.iter().any(|&i| i >= m.rank()) {
        return false;
    }
    component_types(m, subset).is_some()
}

/// All elliptic subsets, including the empty set, in lexicographic order of
/// their sorted node lists.
pub fn enumerate_elliptic_subsets(
    m: &CoxeterMatrix,
    rank_bound: usize,
) -> Result<Vec<EllipticSubset>, DiagramError> {
    if m.rank() > rank_bound {
        return Err(DiagramError::RankBoundExceeded {
            rank: m.rank(),
            bound: rank_bound,
        });
    }
    let mut out = vec![EllipticSubset {
        nodes: Vec::new(),
        components: Vec::new(),
    }];
    let mut current = Vec::new();
    extend(m, &mut current, 0, &mut out);
    Ok(out)
}

// Supersets of a non-elliptic subset are never elliptic, so a failed
// extension prunes the whole branch.
fn extend(m: &CoxeterMatrix, current: &mut Vec<usize>, start: usize, out: &mut Vec<EllipticSubset>) {
    for v in start..m.rank() {
        if current.iter().any(|&u| m.order(u, v) == Order::Infinite) {
            continue;
        }
        current.push(v);
        if let Some(components) = component_types(m, current) {
            out.push(EllipticSubset {
                nodes: current.clone(),
                components,
            });
            extend(m, current, v + 1, out);
        }
        current.pop();
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub size: usize,
    pub types: String,
    pub count: usize,
}

/// Elliptic subsets grouped by size and component types, with a SHA-256
/// digest of the canonical listing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub entries: Vec<CensusEntry>,
    pub hash: String,
}

impl Census {
    /// Number of subsets of each size.
    pub fn counts_by_size(&self) -> Vec<usize> {
        let max = self.entries.iter().map(|e| e.size).max().unwrap_or(0);
        let mut v = vec![0; max + 1];
        for e in &self.entries {
            v[e.size] += e.count;
        }
        v
    }
}

pub fn census(subsets: &[EllipticSubset]) -> Census {
    let mut groups: BTreeMap<(usize, String), usize> = BTreeMap::new();
    for s in subsets {
        *groups.entry((s.len(), s.type_label())).or_insert(0) += 1;
    }
    let mut canonical = String::new();
    let entries: Vec<CensusEntry> = groups
        .into_iter()
        .map(|((size, types), count)| {
            canonical.push_str(&format!("{size}|{types}|{count}\n"));
            CensusEntry { size, types, count }
        })
        .collect();
    let hash = hex::encode(Sha256::digest(canonical.as_bytes()));
    Census { entries, hash }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_coxeter_symbol, symbol_to_graph};

    fn matrix(symbol: &str) -> CoxeterMatrix {
        symbol_to_graph(&parse_coxeter_symbol(symbol).unwrap()).coxeter_matrix()
    }

    fn nodes(list: &[EllipticSubset]) -> Vec<Vec<usize>> {
        list.iter().map(|s| s.nodes.clone()).collect()
    }

    #[test]
    fn lambert_quadrilateral_subsets() {
        let m = matrix("[inf,3,inf]");
        let subsets = enumerate_elliptic_subsets(&m, DEFAULT_RANK_BOUND).unwrap();
        assert_eq!(
            nodes(&subsets),
            vec![
                vec![],
                vec![0],
                vec![0, 2],
                vec![0, 3],
                vec![1],
                vec![1, 2],
                vec![1, 3],
                vec![2],
                vec![3],
            ]
        );
        assert!(is_elliptic(&m, &[1, 2]));
        assert!(!is_elliptic(&m, &[0, 1]));
        assert!(is_elliptic(&m, &[]));
    }

    #[test]
    fn infinite_dihedral_subsets() {
        let m = matrix("[inf]");
        let subsets = enumerate_elliptic_subsets(&m, DEFAULT_RANK_BOUND).unwrap();
        assert_eq!(nodes(&subsets), vec![vec![], vec![0], vec![1]]);
    }

    #[test]
    fn lanner_census() {
        let m = matrix("[5,3,3,3]");
        assert!(!is_elliptic(&m, &[0, 1, 2, 3, 4]));
        let subsets = enumerate_elliptic_subsets(&m, DEFAULT_RANK_BOUND).unwrap();
        let c = census(&subsets);
        assert_eq!(c.counts_by_size(), vec![1, 5, 10, 10, 5]);
        let get = |size: usize, types: &str| {
            c.entries
                .iter()
                .find(|e| e.size == size && e.types == types)
                .map_or(0, |e| e.count)
        };
        assert_eq!(get(2, "A1xA1"), 6);
        assert_eq!(get(2, "A2"), 3);
        assert_eq!(get(2, "I2(5)"), 1);
        assert_eq!(get(3, "A1xA1xA1"), 1);
        assert_eq!(get(3, "A1xA2"), 4);
        assert_eq!(get(3, "A1xI2(5)"), 2);
        assert_eq!(get(3, "A3"), 2);
        assert_eq!(get(3, "H3"), 1);
        assert_eq!(get(4, "H4"), 1);
        assert_eq!(get(4, "A4"), 1);
        assert_eq!(c.hash.len(), 64);
    }

    #[test]
    fn rank_bound() {
        let m = matrix("[3,3,3]");
        assert_eq!(
            enumerate_elliptic_subsets(&m, 3),
            Err(DiagramError::RankBoundExceeded { rank: 4, bound: 3 })
        );
    }

    #[test]
    fn subsets_of_elliptic_sets_are_elliptic() {
        for symbol in ["[5,3,3,3]", "[(3,4,3),4,(3,4,3)]", "[inf,3,inf]", "[5,3,3,3,3]", "[(3^4,4)]"] {
            let m = matrix(symbol);
            let subsets = enumerate_elliptic_subsets(&m, DEFAULT_RANK_BOUND).unwrap();
            let n = m.rank();
            let listed: std::collections::HashSet<Vec<usize>> = nodes(&subsets).into_iter().collect();
            for mask in 0u32..(1 << n) {
                let set: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                assert_eq!(listed.contains(&set), is_elliptic(&m, &set), "{symbol} {set:?}");
                if listed.contains(&set) {
                    for drop in 0..set.len() {
                        let mut sub = set.clone();
                        sub.remove(drop);
                        assert!(listed.contains(&sub));
                    }
                }
            }
        }
    }
}
