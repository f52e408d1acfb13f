//! Finite Coxeter groups enumerated element by element.
#![allow(dead_code)]

use std::collections::HashMap;
use std::f64::consts::PI;

use coxgrowth::{growth_series, parse_graph_file, VinbergGraph};
use num_bigint::BigInt;

/// A connected Coxeter diagram: rank and weighted edges, 0-based.
#[derive(Clone, Debug)]
pub struct Diagram {
    pub name: String,
    pub rank: usize,
    pub edges: Vec<(usize, usize, u32)>,
}

pub fn chain(name: String, weights: &[u32]) -> Diagram {
    Diagram {
        name,
        rank: weights.len() + 1,
        edges: weights.iter().enumerate().map(|(i, &m)| (i, i + 1, m)).collect(),
    }
}

pub fn a(n: usize) -> Diagram {
    chain(format!("A{n}"), &vec![3; n - 1])
}

pub fn b(n: usize) -> Diagram {
    let mut w = vec![3; n - 1];
    w[0] = 4;
    chain(format!("B{n}"), &w)
}

/// Chain on `n - 1` nodes with the last node attached to node `at`.
pub fn branched(name: String, n: usize, at: usize) -> Diagram {
    let mut d = chain(name, &vec![3; n - 2]);
    d.rank = n;
    d.edges.push((at, n - 1, 3));
    d
}

pub fn d(n: usize) -> Diagram {
    branched(format!("D{n}"), n, n - 3)
}

pub fn e(n: usize) -> Diagram {
    branched(format!("E{n}"), n, 2)
}

pub fn i2(m: u32) -> Diagram {
    chain(format!("I2({m})"), &[m])
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Standard group orders.
pub fn order(name: &str) -> u64 {
    let (letter, rest) = name.split_at(1);
    match (letter, rest) {
        ("E", "6") => 51_840,
        ("E", "7") => 2_903_040,
        ("E", "8") => 696_729_600,
        ("F", "4") => 1_152,
        ("H", "3") => 120,
        ("H", "4") => 14_400,
        ("I", m) => 2 * m.trim_start_matches("2(").trim_end_matches(')').parse::<u64>().unwrap(),
        ("A", n) => factorial(n.parse::<u64>().unwrap() + 1),
        ("B", n) => {
            let n: u64 = n.parse().unwrap();
            (1u64 << n) * factorial(n)
        }
        ("D", n) => {
            let n: u64 = n.parse().unwrap();
            (1u64 << (n - 1)) * factorial(n)
        }
        _ => panic!("unknown type {name}"),
    }
}

pub fn connected_types(max_rank: usize) -> Vec<Diagram> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        out.push(a(n));
        if n >= 2 {
            out.push(b(n));
        }
        if n >= 4 {
            out.push(d(n));
        }
        if (6..=8).contains(&n) {
            out.push(e(n));
        }
    }
    if max_rank >= 3 {
        out.push(chain("H3".into(), &[5, 3]));
    }
    if max_rank >= 4 {
        out.push(chain("F4".into(), &[3, 4, 3]));
        out.push(chain("H4".into(), &[5, 3, 3]));
    }
    // B2 and A2 are I2(4) and I2(3).
    for m in [5, 6, 7, 8, 10, 12] {
        out.push(i2(m));
    }
    out
}

pub fn graph_of(parts: &[&Diagram]) -> VinbergGraph {
    let rank: usize = parts.iter().map(|d| d.rank).sum();
    let mut text = format!("rank {rank}\n");
    let mut offset = 0;
    for d in parts {
        for &(i, j, m) in &d.edges {
            text += &format!("edge {} {} {m}\n", offset + i + 1, offset + j + 1);
        }
        offset += d.rank;
    }
    parse_graph_file(&text).unwrap()
}

/// Number of group elements of each length, by breadth-first search on the
/// orbit of a point in the open fundamental chamber.
///
/// A point is stored through its pairings `y_i = B(e_i, x)` with the simple
/// roots, where `B(e_i, e_j) = -cos(π/m_ij)`; then
/// `s_i: y_j ↦ y_j - 2 y_i B(e_i, e_j)`. The orbit of a regular point is in
/// bijection with the group.
pub fn length_distribution(parts: &[&Diagram]) -> Vec<u64> {
    let n: usize = parts.iter().map(|d| d.rank).sum();
    let mut form = vec![vec![0.0f64; n]; n];
    let mut offset = 0;
    for d in parts {
        for &(i, j, m) in &d.edges {
            let c = -(PI / m as f64).cos();
            form[offset + i][offset + j] = c;
            form[offset + j][offset + i] = c;
        }
        offset += d.rank;
    }
    for (i, row) in form.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    let key = |y: &[f64]| -> Vec<i64> { y.iter().map(|v| (v * 1e7).round() as i64).collect() };

    let start = vec![1.0f64; n];
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    seen.insert(key(&start), ());
    let mut frontier = vec![start];
    let mut counts = vec![1u64];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for y in &frontier {
            for i in 0..n {
                let yi = y[i];
                let z: Vec<f64> = (0..n).map(|j| y[j] - 2.0 * yi * form[i][j]).collect();
                if seen.insert(key(&z), ()).is_none() {
                    next.push(z);
                }
            }
        }
        if !next.is_empty() {
            counts.push(next.len() as u64);
        }
        frontier = next;
    }
    counts
}

pub fn library_polynomial(g: &VinbergGraph) -> Vec<BigInt> {
    let f = growth_series(g).unwrap();
    assert!(f.is_polynomial());
    f.numerator().coeffs().to_vec()
}

pub fn name(parts: &[&Diagram]) -> String {
    parts.iter().map(|d| d.name.as_str()).collect::<Vec<_>>().join("×")
}


/// Every multiset of connected types with total rank at most `max_rank` and
/// group order at most `max_order`. Dihedral types use the weights of
/// `connected_types`.
pub fn spherical_diagrams(max_rank: usize, max_order: u64) -> Vec<Vec<Diagram>> {
    let types: Vec<Diagram> = connected_types(max_rank)
        .into_iter()
        .filter(|d| order(&d.name) <= max_order)
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend(&types, 0, max_rank, max_order, &mut current, &mut out);
    out
}

fn extend(
    types: &[Diagram],
    from: usize,
    rank_left: usize,
    order_left: u64,
    current: &mut Vec<Diagram>,
    out: &mut Vec<Vec<Diagram>>,
) {
    if !current.is_empty() {
        out.push(current.clone());
    }
    for (k, d) in types.iter().enumerate().skip(from) {
        let o = order(&d.name);
        if d.rank <= rank_left && o <= order_left {
            current.push(d.clone());
            extend(types, k, rank_left - d.rank, order_left / o, current, out);
            current.pop();
        }
    }
}

/// Compare the library's growth polynomial with the enumerated length
/// distribution.
pub fn check_against_enumeration(parts: &[Diagram]) -> Result<(), String> {
    let refs: Vec<&Diagram> = parts.iter().collect();
    let expected: Vec<BigInt> = length_distribution(&refs).iter().map(|&c| BigInt::from(c)).collect();
    let got = library_polynomial(&graph_of(&refs));
    if got == expected {
        Ok(())
    } else {
        Err(format!("{}: library {got:?}, enumeration {expected:?}", name(&refs)))
    }
}
