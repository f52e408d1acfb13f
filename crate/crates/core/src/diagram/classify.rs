use super::{DiagramError, DiagramType, Family};
use crate::graph::{CoxeterMatrix, Order};

/// Classify a connected Coxeter diagram as spherical, affine, or indefinite.
///
/// A rank-2 diagram with an `∞` entry is the affine `~A1`; `∞` in higher rank
/// is indefinite.
pub fn classify_connected(m: &CoxeterMatrix) -> Result<DiagramType, DiagramError> {
    if m.rank() == 0 || !m.is_connected() {
        return Err(DiagramError::Disconnected);
    }
    let nodes: Vec<usize> = (0..m.rank()).collect();
    Ok(classify_nodes(m, &nodes))
}

/// Classify the subdiagram on `nodes`, which must be connected.
pub(crate) fn classify_nodes(m: &CoxeterMatrix, nodes: &[usize]) -> DiagramType {
    let n = nodes.len();
    if n == 1 {
        return DiagramType::spherical(Family::A, 1);
    }
    let order = |a: usize, b: usize| m.order(nodes[a], nodes[b]);
    if n == 2 {
        return match order(0, 1) {
            Order::Infinite => DiagramType::affine(Family::AffineA, 2),
            Order::Finite(w) => DiagramType::dihedral(w),
        };
    }

    // Local adjacency with weights; ∞ anywhere is indefinite from rank 3 on.
    let mut adj: Vec<Vec<(usize, u32)>> = vec![Vec::new(); n];
    let mut edge_count = 0;
    for a in 0..n {
        for b in (a + 1)..n {
            match order(a, b) {
                Order::Infinite => return DiagramType::indefinite(n),
                Order::Finite(2) => {}
                Order::Finite(w) => {
                    adj[a].push((b, w));
                    adj[b].push((a, w));
                    edge_count += 1;
                }
            }
        }
    }

    if edge_count == n {
        // Exactly one cycle: only ~A_{n-1} with all weights 3.
        let plain = adj.iter().all(|v| v.len() == 2 && v.iter().all(|&(_, w)| w == 3));
        return if plain {
            DiagramType::affine(Family::AffineA, n)
        } else {
            DiagramType::indefinite(n)
        };
    }
    if edge_count != n - 1 {
        return DiagramType::indefinite(n);
    }

    let degrees: Vec<usize> = adj.iter().map(Vec::len).collect();
    let branch_nodes: Vec<usize> = (0..n).filter(|&v| degrees[v] >= 3).collect();
    match branch_nodes.as_slice() {
        [] => classify_path(&path_weights(&adj)),
        [b] if degrees[*b] == 3 => classify_fork(&adj, *b),
        [b] if degrees[*b] == 4 => {
            let plain = n == 5 && adj[*b].iter().all(|&(_, w)| w == 3);
            if plain {
                DiagramType::affine(Family::AffineD, 5)
            } else {
                DiagramType::indefinite(n)
            }
        }
        [b1, b2] if degrees[*b1] == 3 && degrees[*b2] == 3 => classify_two_forks(&adj, *b1, *b2),
        _ => DiagramType::indefinite(n),
    }
}

/// Weights along a path diagram, read from the lowest-indexed end.
fn path_weights(adj: &[Vec<(usize, u32)>]) -> Vec<u32> {
    let start = (0..adj.len()).find(|&v| adj[v].len() == 1).expect("path has an end");
    let mut weights = Vec::with_capacity(adj.len() - 1);
    let (mut prev, mut cur) = (usize::MAX, start);
    loop {
        let next = adj[cur].iter().find(|&&(v, _)| v != prev);
        match next {
            Some(&(v, w)) => {
                weights.push(w);
                prev = cur;
                cur = v;
            }
            None => break,
        }
    }
    weights
}

fn classify_path(weights: &[u32]) -> DiagramType {
    let n = weights.len() + 1;
    let reversed: Vec<u32> = weights.iter().rev().copied().collect();
    // Try both orientations; a pattern matches if either does.
    let matches = |pattern: &dyn Fn(&[u32]) -> bool| pattern(weights) || pattern(&reversed);
    let all_three = |ws: &[u32]| ws.iter().all(|&w| w == 3);

    if all_three(weights) {
        return DiagramType::spherical(Family::A, n);
    }
    if matches(&|ws| ws[0] == 4 && all_three(&ws[1..])) {
        return DiagramType::spherical(Family::B, n);
    }
    if weights == [3, 4, 3] {
        return DiagramType::spherical(Family::F4, 4);
    }
    if matches(&|ws| ws[0] == 5 && all_three(&ws[1..])) {
        match n {
            3 => return DiagramType::spherical(Family::H3, 3),
            4 => return DiagramType::spherical(Family::H4, 4),
            _ => {}
        }
    }
    if n >= 3 && matches(&|ws| ws[0] == 4 && ws[ws.len() - 1] == 4 && all_three(&ws[1..ws.len() - 1])) {
        return DiagramType::affine(Family::AffineC, n);
    }
    if matches(&|ws| ws == [3, 3, 4, 3]) {
        return DiagramType::affine(Family::AffineF4, 5);
    }
    if matches(&|ws| ws == [6, 3]) {
        return DiagramType::affine(Family::AffineG2, 3);
    }
    DiagramType::indefinite(n)
}

/// Walk from the branch node `b` along the leg starting at neighbour `first`.
/// Returns the weights on the leg, nearest edge first.
fn leg(adj: &[Vec<(usize, u32)>], b: usize, first: (usize, u32)) -> Vec<u32> {
    let mut weights = vec![first.1];
    let (mut prev, mut cur) = (b, first.0);
    while let Some(&(v, w)) = adj[cur].iter().find(|&&(v, _)| v != prev) {
        if adj[cur].len() > 2 {
            break;
        }
        weights.push(w);
        prev = cur;
        cur = v;
    }
    weights
}

fn classify_fork(adj: &[Vec<(usize, u32)>], b: usize) -> DiagramType {
    let n = adj.len();
    let mut legs: Vec<Vec<u32>> = adj[b].iter().map(|&e| leg(adj, b, e)).collect();
    legs.sort_by_key(|l| (l.len(), l.clone()));
    let lens: Vec<usize> = legs.iter().map(Vec::len).collect();
    let non_three: Vec<(usize, usize)> = legs
        .iter()
        .enumerate()
        .flat_map(|(i, l)| l.iter().enumerate().filter(|&(_, &w)| w != 3).map(move |(k, _)| (i, k)))
        .collect();

    if non_three.is_empty() {
        return match lens.as_slice() {
            [1, 1, _] => DiagramType::spherical(Family::D, n),
            [1, 2, 2] => DiagramType::spherical(Family::E6, 6),
            [1, 2, 3] => DiagramType::spherical(Family::E7, 7),
            [1, 2, 4] => DiagramType::spherical(Family::E8, 8),
            [2, 2, 2] => DiagramType::affine(Family::AffineE6, 7),
            [1, 3, 3] => DiagramType::affine(Family::AffineE7, 8),
            [1, 2, 5] => DiagramType::affine(Family::AffineE8, 9),
            _ => DiagramType::indefinite(n),
        };
    }
    // ~B: a fork (1,1,k) whose long leg ends with a single 4.
    if let ([1, 1, k], [(i, pos)]) = (lens.as_slice(), non_three.as_slice()) {
        let w = legs[*i][*pos];
        if w == 4 && *pos == legs[*i].len() - 1 && legs[*i].len() == *k {
            return DiagramType::affine(Family::AffineB, n);
        }
    }
    DiagramType::indefinite(n)
}

fn classify_two_forks(adj: &[Vec<(usize, u32)>], b1: usize, b2: usize) -> DiagramType {
    let n = adj.len();
    // A tree with two degree-3 nodes has exactly four leaves; ~D_{n-1} has
    // two of them at each fork.
    let plain = adj.iter().all(|v| v.iter().all(|&(_, w)| w == 3));
    let leaves = |b: usize| adj[b].iter().filter(|&&(v, _)| adj[v].len() == 1).count();
    if plain && leaves(b1) == 2 && leaves(b2) == 2 {
        DiagramType::affine(Family::AffineD, n)
    } else {
        DiagramType::indefinite(n)
    }
}
