//! Maximal clique enumeration (Bron–Kerbosch with Tomita pivoting) over
//! bitset candidate sets.

use crate::bitset::{and_count, BitSet};
use crate::graph::Graph;

/// All maximal cliques of `g`, each sorted ascending, the list sorted
/// lexicographically.
pub fn enumerate_maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let candidates = BitSet::from_indices(n, 0..n);
    let excluded = BitSet::new(n);
    let mut current = Vec::new();
    expand(g, &mut current, candidates, excluded, &mut out);
    for clique in &mut out {
        clique.sort_unstable();
    }
    out.sort();
    out
}

fn expand(
    g: &Graph,
    current: &mut Vec<usize>,
    mut candidates: BitSet,
    mut excluded: BitSet,
    out: &mut Vec<Vec<usize>>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            out.push(current.clone());
        }
        return;
    }
    // pivot maximising |P ∩ N(u)| over P ∪ X
    let pivot = candidates
        .iter()
        .chain(excluded.iter())
        .max_by_key(|&u| {
            (
                and_count(candidates.words(), g.row(u)),
                std::cmp::Reverse(u),
            )
        })
        .expect("candidates non-empty");
    let mut branch = candidates.clone();
    branch.difference_with(g.row(pivot));
    for v in branch.iter() {
        let mut next_p = candidates.clone();
        next_p.intersect_with(g.row(v));
        let mut next_x = excluded.clone();
        next_x.intersect_with(g.row(v));
        current.push(v);
        expand(g, current, next_p, next_x, out);
        current.pop();
        candidates.remove(v);
        excluded.insert(v);
    }
}

/// True when every pair in `vertices` is adjacent.
pub fn is_clique(g: &Graph, vertices: &[usize]) -> bool {
    vertices.iter().enumerate().all(|(i, &u)| {
        vertices[i + 1..]
            .iter()
            .all(|&v| u != v && g.adjacent(u, v))
    })
}

/// True when no pair in `vertices` is adjacent.
pub fn is_coclique(g: &Graph, vertices: &[usize]) -> bool {
    vertices
        .iter()
        .enumerate()
        .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !g.adjacent(u, v)))
}
