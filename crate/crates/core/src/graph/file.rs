//! Line-oriented graph files.
//!
//! ```text
//! # comment
//! rank 7
//! dim 5
//! edge 1 2 5
//! edge 6 7 inf
//! cosh 6 7 3/2
//! ```
//!
//! `symbol [5,3,3,3]` may replace all `edge` lines. Indices are 1-based.

use std::fmt::Write as _;

use super::{parse_coxeter_symbol, symbol_to_graph, CoshDistance, EdgeLabel, GraphError, VinbergGraph};

fn file_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::File {
        line,
        message: message.into(),
    }
}

fn parse_index(line: usize, text: &str, rank: usize) -> Result<usize, GraphError> {
    let value: usize = text
        .parse()
        .map_err(|_| file_err(line, format!("malformed node index `{text}`")))?;
    if value == 0 || value > rank {
        return Err(GraphError::IndexOutOfRange {
            line,
            index: value,
            rank,
        });
    }
    Ok(value - 1)
}

fn parse_weight(line: usize, text: &str) -> Result<EdgeLabel, GraphError> {
    if text == "inf" || text == "∞" {
        return Ok(EdgeLabel::Dotted(None));
    }
    match text.parse::<u32>() {
        Ok(m) if m >= 3 => Ok(EdgeLabel::Finite(m)),
        _ => Err(GraphError::MalformedWeight {
            line,
            text: text.to_string(),
        }),
    }
}

/// Parse a graph file into a [`VinbergGraph`].
pub fn parse_graph_file(text: &str) -> Result<VinbergGraph, GraphError> {
    let mut rank: Option<usize> = None;
    let mut dim: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize, EdgeLabel)> = Vec::new();
    let mut coshes: Vec<(usize, usize, usize, CoshDistance)> = Vec::new();
    let mut symbol: Option<(usize, VinbergGraph)> = None;

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let (keyword, rest) = content
            .split_once(char::is_whitespace)
            .map_or((content, ""), |(a, b)| (a, b.trim()));
        let fields: Vec<&str> = rest.split_whitespace().collect();

        let Some(n) = rank else {
            if keyword != "rank" {
                return Err(file_err(line, "the first line must be `rank N`"));
            }
            match fields.as_slice() {
                [v] => match v.parse::<usize>() {
                    Ok(v) if v >= 1 => rank = Some(v),
                    _ => return Err(file_err(line, format!("invalid rank `{v}`"))),
                },
                _ => return Err(file_err(line, "expected `rank N`")),
            }
            continue;
        };

        match keyword {
            "rank" => return Err(file_err(line, "rank declared twice")),
            "dim" => {
                if dim.is_some() {
                    return Err(file_err(line, "dim declared twice"));
                }
                match fields.as_slice() {
                    [v] => match v.parse::<usize>() {
                        Ok(v) if v >= 1 => dim = Some(v),
                        _ => return Err(file_err(line, format!("invalid dimension `{v}`"))),
                    },
                    _ => return Err(file_err(line, "expected `dim n`")),
                }
            }
            "edge" => {
                let [i, j, w] = fields.as_slice() else {
                    return Err(file_err(line, "expected `edge i j w`"));
                };
                let i = parse_index(line, i, n)?;
                let j = parse_index(line, j, n)?;
                if i >= j {
                    return Err(file_err(line, "edge endpoints must satisfy i < j"));
                }
                let label = parse_weight(line, w)?;
                edges.push((line, i, j, label));
            }
            "cosh" => {
                let [i, j, value @ ..] = fields.as_slice() else {
                    return Err(file_err(line, "expected `cosh i j value`"));
                };
                if value.is_empty() {
                    return Err(file_err(line, "expected `cosh i j value`"));
                }
                let i = parse_index(line, i, n)?;
                let j = parse_index(line, j, n)?;
                if i >= j {
                    return Err(file_err(line, "cosh endpoints must satisfy i < j"));
                }
                let c: CoshDistance = value
                    .concat()
                    .parse()
                    .map_err(|e| file_err(line, format!("malformed cosh value: {e}")))?;
                if !c.exceeds_one() {
                    return Err(GraphError::CoshNotAboveOne { line });
                }
                coshes.push((line, i, j, c));
            }
            "symbol" => {
                if symbol.is_some() {
                    return Err(file_err(line, "symbol declared twice"));
                }
                let sym = parse_coxeter_symbol(rest).map_err(|e| file_err(line, e.to_string()))?;
                let g = symbol_to_graph(&sym);
                if g.rank() != n {
                    return Err(file_err(
                        line,
                        format!("symbol has {} nodes but rank is {n}", g.rank()),
                    ));
                }
                symbol = Some((line, g));
            }
            other => return Err(file_err(line, format!("unknown keyword `{other}`"))),
        }
    }

    let n = rank.ok_or_else(|| file_err(text.lines().count().max(1), "missing `rank N` line"))?;
    let mut g = match symbol {
        Some((line, g)) => {
            if let Some((edge_line, ..)) = edges.first() {
                return Err(file_err(
                    (*edge_line).max(line),
                    "`symbol` and `edge` lines cannot be mixed",
                ));
            }
            g
        }
        None => {
            let mut g = VinbergGraph::new(n);
            for (line, i, j, label) in edges {
                if g.label(i, j).is_some() {
                    return Err(GraphError::DuplicateEdge {
                        line,
                        i: i + 1,
                        j: j + 1,
                    });
                }
                g.add_edge(i, j, label).map_err(|e| file_err(line, e.to_string()))?;
            }
            g
        }
    };
    for (line, i, j, c) in coshes {
        match g.label(i, j) {
            Some(EdgeLabel::Dotted(None)) => {}
            Some(EdgeLabel::Dotted(Some(_))) => {
                return Err(file_err(line, "distance given twice for this edge"))
            }
            _ => return Err(file_err(line, "cosh given for a pair that is not a dotted edge")),
        }
        g.set_cosh(i, j, c).map_err(|e| file_err(line, e.to_string()))?;
    }
    g.set_dimension(dim);
    Ok(g)
}

/// Canonical text form; `parse_graph_file(serialize_graph(g)) == g`.
pub fn serialize_graph(g: &VinbergGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "rank {}", g.rank());
    if let Some(d) = g.dimension() {
        let _ = writeln!(out, "dim {d}");
    }
    for (i, j, label) in g.edges() {
        match label {
            EdgeLabel::Finite(m) => {
                let _ = writeln!(out, "edge {} {} {m}", i + 1, j + 1);
            }
            EdgeLabel::Dotted(_) => {
                let _ = writeln!(out, "edge {} {} inf", i + 1, j + 1);
            }
        }
    }
    for (i, j, c) in g.dotted_edges() {
        if let Some(c) = c {
            let _ = writeln!(out, "cosh {} {} {c}", i + 1, j + 1);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Order;
    use proptest::prelude::*;

    #[test]
    fn triangle_group_file() {
        let g = parse_graph_file("rank 3\nedge 1 2 7\nedge 2 3 3\n").unwrap();
        assert_eq!(g.order(0, 1), Order::Finite(7));
        assert_eq!(g.order(1, 2), Order::Finite(3));
        assert_eq!(g.order(0, 2), Order::Finite(2));
        let inf = parse_graph_file("rank 2\nedge 1 2 inf\n").unwrap();
        assert_eq!(inf.order(0, 1), Order::Infinite);
    }

    #[test]
    fn symbol_line_and_comments() {
        let g = parse_graph_file("# Lannér simplex\n\nrank 5\ndim 4\nsymbol [5,3,3,3]\n").unwrap();
        assert_eq!(g.dimension(), Some(4));
        assert_eq!(g.edges().count(), 4);
        assert!(parse_graph_file("rank 4\nsymbol [5,3,3,3]\n").is_err());
        assert!(parse_graph_file("rank 5\nsymbol [5,3,3,3]\nedge 1 3 3\n").is_err());
    }

    #[test]
    fn cosh_lines() {
        let g = parse_graph_file("rank 3\nedge 1 2 inf\ncosh 1 2 sqrt(6)/2\nedge 2 3 3\n").unwrap();
        let (_, _, c) = g.dotted_edges().next().unwrap();
        assert_eq!(c.unwrap().to_string(), "0+1*sqrt(6)/2");
        assert!(matches!(
            parse_graph_file("rank 2\nedge 1 2 inf\ncosh 1 2 1/2\n"),
            Err(GraphError::CoshNotAboveOne { line: 3 })
        ));
        assert!(parse_graph_file("rank 2\nedge 1 2 4\ncosh 1 2 2\n").is_err());
        assert!(parse_graph_file("rank 2\ncosh 1 2 2\n").is_err());
    }

    #[test]
    fn reports_errors_with_lines() {
        assert!(matches!(
            parse_graph_file("rank 3\nedge 1 2 3\nedge 1 2 4\n"),
            Err(GraphError::DuplicateEdge { line: 3, i: 1, j: 2 })
        ));
        assert!(matches!(
            parse_graph_file("rank 3\nedge 1 4 3\n"),
            Err(GraphError::IndexOutOfRange { line: 2, index: 4, rank: 3 })
        ));
        assert!(matches!(
            parse_graph_file("rank 3\nedge 1 2 2\n"),
            Err(GraphError::MalformedWeight { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph_file("rank 3\nedge 1 2 x\n"),
            Err(GraphError::MalformedWeight { line: 2, .. })
        ));
        assert!(parse_graph_file("edge 1 2 3\n").is_err());
        assert!(parse_graph_file("rank 3\nedge 2 1 3\n").is_err());
        assert!(parse_graph_file("").is_err());
        assert!(parse_graph_file("rank 3\nvertex 1\n").is_err());
    }

    fn arb_graph() -> impl Strategy<Value = VinbergGraph> {
        (1usize..8).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (
                Just(n),
                proptest::collection::vec(0u32..8, pairs),
                proptest::option::of(1usize..9),
                proptest::collection::vec((2i64..50, 1i64..20), pairs),
            )
                .prop_map(|(n, codes, dim, coshes)| {
                    let mut g = VinbergGraph::new(n);
                    g.set_dimension(dim);
                    let mut k = 0;
                    for i in 0..n {
                        for j in (i + 1)..n {
                            let label = match codes[k] {
                                0..=2 => None,
                                7 => {
                                    let (a, b) = coshes[k];
                                    let c = CoshDistance::rational(num_rational::BigRational::new(
                                        (a * b + 1).into(),
                                        b.into(),
                                    ));
                                    Some(EdgeLabel::Dotted(Some(c)))
                                }
                                6 => Some(EdgeLabel::Dotted(None)),
                                m => Some(EdgeLabel::Finite(m)),
                            };
                            if let Some(l) = label {
                                g.add_edge(i, j, l).unwrap();
                            }
                            k += 1;
                        }
                    }
                    g
                })
        })
    }

    proptest! {
        #[test]
        fn parse_serialize_round_trip(g in arb_graph()) {
            let text = serialize_graph(&g);
            let back = parse_graph_file(&text).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(serialize_graph(&back), text);
        }

        #[test]
        fn linear_symbols_have_k_edges(ws in proptest::collection::vec(3u32..9, 1..8)) {
            let text = format!(
                "[{}]",
                ws.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
            );
            let g = symbol_to_graph(&parse_coxeter_symbol(&text).unwrap());
            prop_assert_eq!(g.rank(), ws.len() + 1);
            prop_assert_eq!(g.edges().count(), ws.len());
        }

        #[test]
        fn restriction_matches_induced(g in arb_graph(), mask in 1u32..256) {
            let nodes: Vec<usize> = (0..g.rank()).filter(|i| mask & (1 << i) != 0).collect();
            prop_assume!(!nodes.is_empty());
            let sub = g.induced_subgraph(&nodes).unwrap();
            prop_assert_eq!(sub.graph.coxeter_matrix(), g.coxeter_matrix().restrict(&nodes));
        }
    }
}
