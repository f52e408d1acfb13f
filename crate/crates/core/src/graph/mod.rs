//! Coxeter matrices, Vinberg graphs, and their text formats.
//!
//! Node indices are 0-based in the API. The graph file format and the CLI
//! use 1-based indices.

mod cosh;
mod file;
mod symbol;
mod validate;

pub use cosh::CoshDistance;
pub use file::{parse_graph_file, serialize_graph};
pub use symbol::{parse_coxeter_symbol, symbol_to_graph, Component, CoxeterSymbol, Weight};
pub use validate::{validate_graph, GraphDiagnostics};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("weight {weight} at byte {offset} must be at least 3")]
    WeightTooSmall { weight: u64, offset: usize },
    #[error("unsupported branch exponent at byte {offset}; only ^{{1,1}} is accepted")]
    UnsupportedBranch { offset: usize },
    #[error("line {line}: {message}")]
    File { line: usize, message: String },
    #[error("line {line}: duplicate edge {i} {j}")]
    DuplicateEdge { line: usize, i: usize, j: usize },
    #[error("line {line}: node index {index} out of range 1..={rank}")]
    IndexOutOfRange { line: usize, index: usize, rank: usize },
    #[error("line {line}: malformed weight `{text}`")]
    MalformedWeight { line: usize, text: String },
    #[error("line {line}: cosh distance must exceed 1")]
    CoshNotAboveOne { line: usize },
    #[error("edge {i} {j}: {message}")]
    InvalidEdge { i: usize, j: usize, message: String },
    #[error("node subset must be nonempty")]
    EmptySubset,
}

/// Order `m_ij` of a product of two generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn is_finite(self) -> bool {
        matches!(self, Order::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(m) => Some(m),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(m) => write!(f, "{m}"),
            Order::Infinite => write!(f, "inf"),
        }
    }
}

/// Symmetric table of pairwise orders with ones on the diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoxeterMatrix {
    orders: Vec<Vec<Order>>,
}

impl CoxeterMatrix {
    pub fn new(orders: Vec<Vec<Order>>) -> Result<Self, GraphError> {
        let n = orders.len();
        for (i, row) in orders.iter().enumerate() {
            if row.len() != n {
                return Err(GraphError::InvalidEdge {
                    i: i + 1,
                    j: 0,
                    message: "matrix is not square".into(),
                });
            }
            for (j, &m) in row.iter().enumerate() {
                let ok = if i == j {
                    m == Order::Finite(1)
                } else {
                    m == orders[j][i] && m >= Order::Finite(2)
                };
                if !ok {
                    return Err(GraphError::InvalidEdge {
                        i: i + 1,
                        j: j + 1,
                        message: format!("entry {m} violates the Coxeter matrix conditions"),
                    });
                }
            }
        }
        Ok(Self { orders })
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self, i: usize, j: usize) -> Order {
        self.orders[i][j]
    }

    pub fn rows(&self) -> &[Vec<Order>] {
        &self.orders
    }

    /// Restriction to the given nodes, in the given order.
    pub fn restrict(&self, nodes: &[usize]) -> CoxeterMatrix {
        CoxeterMatrix {
            orders: nodes
                .iter()
                .map(|&i| nodes.iter().map(|&j| self.orders[i][j]).collect())
                .collect(),
        }
    }

    /// Neighbours of `i` (pairs with `m_ij >= 3`).
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank()).filter(move |&j| j != i && self.orders[i][j] != Order::Finite(2))
    }

    pub fn has_infinite_entry(&self) -> bool {
        self.orders
            .iter()
            .any(|row| row.contains(&Order::Infinite))
    }

    /// Connected components of the Coxeter graph restricted to `nodes`,
    /// each sorted, listed by smallest element.
    pub fn components_of(&self, nodes: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.rank()];
        let in_set: Vec<bool> = {
            let mut v = vec![false; self.rank()];
            for &i in nodes {
                v[i] = true;
            }
            v
        };
        let mut sorted: Vec<usize> = nodes.to_vec();
        sorted.sort_unstable();
        let mut out = Vec::new();
        for &start in &sorted {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < comp.len() {
                let v = comp[k];
                for w in self.neighbors(v) {
                    if in_set[w] && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let all: Vec<usize> = (0..self.rank()).collect();
        self.components_of(&all).len() <= 1
    }

    /// The Coxeter graph of this matrix (∞ becomes a distance-free dotted edge).
    pub fn to_graph(&self) -> VinbergGraph {
        let mut g = VinbergGraph::new(self.rank());
        for i in 0..self.rank() {
            for j in (i + 1)..self.rank() {
                let label = match self.orders[i][j] {
                    Order::Finite(2) => continue,
                    Order::Finite(m) => EdgeLabel::Finite(m),
                    Order::Infinite => EdgeLabel::Dotted(None),
                };
                g.add_edge(i, j, label).expect("valid matrix entries");
            }
        }
        g
    }
}

/// Label of an edge of a Vinberg graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeLabel {
    /// Dihedral angle `π/m`, `m >= 3`.
    Finite(u32),
    /// Disjoint facets, optionally at a known hyperbolic distance.
    Dotted(Option<CoshDistance>),
}

impl EdgeLabel {
    pub fn order(&self) -> Order {
        match self {
            EdgeLabel::Finite(m) => Order::Finite(*m),
            EdgeLabel::Dotted(_) => Order::Infinite,
        }
    }

    pub fn is_dotted(&self) -> bool {
        matches!(self, EdgeLabel::Dotted(_))
    }
}

/// Graph of a Coxeter polyhedron: nodes are facets; absent edges mean
/// orthogonal facets (`m = 2`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VinbergGraph {
    rank: usize,
    edges: BTreeMap<(usize, usize), EdgeLabel>,
    dimension: Option<usize>,
}

/// Result of [`VinbergGraph::induced_subgraph`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: VinbergGraph,
    /// `index_map[k]` is the parent index of subgraph node `k`.
    pub index_map: Vec<usize>,
}

impl VinbergGraph {
    pub fn new(rank: usize) -> Self {
        Self {
            rank,
            edges: BTreeMap::new(),
            dimension: None,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension hint carried by a graph file (`dim n`).
    pub fn dimension(&self) -> Option<usize> {
        self.dimension
    }

    pub fn set_dimension(&mut self, dim: Option<usize>) {
        self.dimension = dim;
    }

    pub fn add_edge(&mut self, i: usize, j: usize, label: EdgeLabel) -> Result<(), GraphError> {
        let err = |message: &str| GraphError::InvalidEdge {
            i: i + 1,
            j: j + 1,
            message: message.to_string(),
        };
        if i == j {
            return Err(err("self-loops are not allowed"));
        }
        if i >= self.rank || j >= self.rank {
            return Err(err("node index out of range"));
        }
        match &label {
            EdgeLabel::Finite(m) if *m < 3 => return Err(err("finite weights must be at least 3")),
            EdgeLabel::Dotted(Some(c)) if !c.exceeds_one() => {
                return Err(err("cosh distance must exceed 1"))
            }
            _ => {}
        }
        let key = (i.min(j), i.max(j));
        if self.edges.contains_key(&key) {
            return Err(err("duplicate edge"));
        }
        self.edges.insert(key, label);
        Ok(())
    }

    /// Attach a distance to an existing dotted edge.
    pub fn set_cosh(&mut self, i: usize, j: usize, value: CoshDistance) -> Result<(), GraphError> {
        let key = (i.min(j), i.max(j));
        let err = |message: &str| GraphError::InvalidEdge {
            i: i + 1,
            j: j + 1,
            message: message.to_string(),
        };
        if !value.exceeds_one() {
            return Err(err("cosh distance must exceed 1"));
        }
        match self.edges.get_mut(&key) {
            Some(EdgeLabel::Dotted(slot)) => {
                *slot = Some(value);
                Ok(())
            }
            Some(_) => Err(err("distance given for a non-dotted edge")),
            None => Err(err("distance given for a missing edge")),
        }
    }

    pub fn label(&self, i: usize, j: usize) -> Option<&EdgeLabel> {
        self.edges.get(&(i.min(j), i.max(j)))
    }

    pub fn order(&self, i: usize, j: usize) -> Order {
        if i == j {
            return Order::Finite(1);
        }
        self.label(i, j).map_or(Order::Finite(2), EdgeLabel::order)
    }

    /// Edges in canonical order, `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &EdgeLabel)> {
        self.edges.iter().map(|(&(i, j), l)| (i, j, l))
    }

    pub fn dotted_edges(&self) -> impl Iterator<Item = (usize, usize, Option<&CoshDistance>)> {
        self.edges().filter_map(|(i, j, l)| match l {
            EdgeLabel::Dotted(c) => Some((i, j, c.as_ref())),
            EdgeLabel::Finite(_) => None,
        })
    }

    pub fn coxeter_matrix(&self) -> CoxeterMatrix {
        let n = self.rank;
        CoxeterMatrix {
            orders: (0..n)
                .map(|i| (0..n).map(|j| self.order(i, j)).collect())
                .collect(),
        }
    }

    /// Node-induced subgraph with nodes relabelled `0..k` in the order given.
    pub fn induced_subgraph(&self, nodes: &[usize]) -> Result<InducedSubgraph, GraphError> {
        if nodes.is_empty() {
            return Err(GraphError::EmptySubset);
        }
        let mut pos = vec![None; self.rank];
        for (k, &v) in nodes.iter().enumerate() {
            if v >= self.rank {
                return Err(GraphError::InvalidEdge {
                    i: v + 1,
                    j: v + 1,
                    message: "node index out of range".into(),
                });
            }
            if pos[v].is_some() {
                return Err(GraphError::InvalidEdge {
                    i: v + 1,
                    j: v + 1,
                    message: "node listed twice".into(),
                });
            }
            pos[v] = Some(k);
        }
        let mut graph = VinbergGraph::new(nodes.len());
        for (i, j, label) in self.edges() {
            if let (Some(a), Some(b)) = (pos[i], pos[j]) {
                graph
                    .add_edge(a, b, label.clone())
                    .expect("edge of a valid graph");
            }
        }
        Ok(InducedSubgraph {
            graph,
            index_map: nodes.to_vec(),
        })
    }

    /// Graph with node `k` moved to position `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> VinbergGraph {
        assert_eq!(perm.len(), self.rank);
        let mut g = VinbergGraph::new(self.rank);
        g.dimension = self.dimension;
        for (i, j, l) in self.edges() {
            g.add_edge(perm[i], perm[j], l.clone())
                .expect("permutation of a valid graph");
        }
        g
    }
}
