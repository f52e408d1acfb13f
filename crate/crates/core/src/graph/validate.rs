use serde::Serialize;

use super::VinbergGraph;

/// Structural diagnostics for a Vinberg graph. Node indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphDiagnostics {
    pub rank: usize,
    pub connected: bool,
    pub component_count: usize,
    pub dotted_edges: usize,
    /// Cut nodes whose removal leaves more than one part carrying a dotted
    /// edge. A compact polyhedron cannot have these.
    pub cut_node_violations: Vec<usize>,
    /// No dotted edges, so every pair of facets intersects.
    pub all_facets_intersect: bool,
}

impl GraphDiagnostics {
    pub fn signature_condition_ok(&self) -> bool {
        self.cut_node_violations.is_empty()
    }
}

/// Components of the underlying graph (all edges) after deleting `removed`.
fn components_without(g: &VinbergGraph, removed: Option<usize>) -> Vec<Vec<usize>> {
    let n = g.rank();
    let mut adj = vec![Vec::new(); n];
    for (i, j, _) in g.edges() {
        adj[i].push(j);
        adj[j].push(i);
    }
    let mut seen = vec![false; n];
    if let Some(r) = removed {
        seen[r] = true;
    }
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut k = 0;
        while k < comp.len() {
            for &w in &adj[comp[k]] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            k += 1;
        }
        out.push(comp);
    }
    out
}

pub fn validate_graph(g: &VinbergGraph) -> GraphDiagnostics {
    let n = g.rank();
    let base = components_without(g, None);
    let dotted: Vec<(usize, usize)> = g.dotted_edges().map(|(i, j, _)| (i, j)).collect();

    let mut violations = Vec::new();
    for v in 0..n {
        let parts = components_without(g, Some(v));
        if parts.len() <= base.len() {
            continue;
        }
        let mut member = vec![usize::MAX; n];
        for (k, comp) in parts.iter().enumerate() {
            for &x in comp {
                member[x] = k;
            }
        }
        // Dotted edges at `v` are deleted with it; the rest lie inside one part.
        let mut carrying: Vec<usize> = dotted
            .iter()
            .filter(|&&(i, j)| i != v && j != v)
            .map(|&(i, _)| member[i])
            .collect();
        carrying.sort_unstable();
        carrying.dedup();
        if carrying.len() > 1 {
            violations.push(v);
        }
    }

    GraphDiagnostics {
        rank: n,
        connected: base.len() == 1,
        component_count: base.len(),
        dotted_edges: dotted.len(),
        cut_node_violations: violations,
        all_facets_intersect: dotted.is_empty(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_coxeter_symbol, parse_graph_file, symbol_to_graph};

    #[test]
    fn simplex_diagnostics() {
        let g = symbol_to_graph(&parse_coxeter_symbol("[5,3,3,3]").unwrap());
        let d = validate_graph(&g);
        assert!(d.connected);
        assert_eq!(d.dotted_edges, 0);
        assert!(d.all_facets_intersect);
        assert!(d.signature_condition_ok());
    }

    #[test]
    fn prism_has_one_dotted_edge() {
        let g = parse_graph_file("rank 7\nedge 1 2 5\nedge 2 3 3\n").unwrap();
        assert!(!validate_graph(&g).connected);
        let g = parse_graph_file(
            "rank 7\nedge 1 2 5\nedge 2 3 3\nedge 3 4 3\nedge 4 5 3\nedge 5 6 3\nedge 6 7 inf\n",
        )
        .unwrap();
        let d = validate_graph(&g);
        assert!(d.connected);
        assert_eq!(d.dotted_edges, 1);
        assert!(!d.all_facets_intersect);
        assert!(d.signature_condition_ok());
    }

    #[test]
    fn dotted_edges_on_both_sides_of_a_cut_node() {
        let g = symbol_to_graph(&parse_coxeter_symbol("[inf,3,3,inf]").unwrap());
        let d = validate_graph(&g);
        assert_eq!(d.dotted_edges, 2);
        assert_eq!(d.cut_node_violations, vec![2]);
        // Deleting the middle node removes both dotted edges.
        let h = symbol_to_graph(&parse_coxeter_symbol("[inf,inf,3]").unwrap());
        assert!(validate_graph(&h).cut_node_violations.is_empty());
        let q = symbol_to_graph(&parse_coxeter_symbol("[inf,3,inf]").unwrap());
        assert!(validate_graph(&q).signature_condition_ok());
    }

    #[test]
    fn deterministic() {
        let g = symbol_to_graph(&parse_coxeter_symbol("[(3,4,3),4,(3,4,3)]").unwrap());
        let before = g.clone();
        assert_eq!(validate_graph(&g), validate_graph(&g));
        assert_eq!(g, before);
    }
}
