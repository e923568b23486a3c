//! Naive reference computations over edge subsets, independent of the
//! matching and deletion solvers. Only for graphs with at most 20 edges.

use crate::graph::{Edge, LabeledGraph};

fn nu(edges: &[Edge], mask: u32) -> usize {
    if mask == 0 {
        return 0;
    }
    let i = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << i);
    let skip = nu(edges, rest);
    let e = edges[i];
    let mut compatible = rest;
    for (j, f) in edges.iter().enumerate() {
        if compatible >> j & 1 == 1 && f.shares_endpoint(&e) {
            compatible &= !(1 << j);
        }
    }
    skip.max(1 + nu(edges, compatible))
}

/// Matching number of the spanning subgraph with edge set `mask`.
pub fn matching_number_of(g: &LabeledGraph, mask: u32) -> usize {
    assert!(g.edge_count() <= 20, "oracle is limited to 20 edges");
    nu(g.edges(), mask)
}

/// Largest edge count of a spanning subgraph with no r-matching.
pub fn max_free_subgraph(g: &LabeledGraph, r: usize) -> usize {
    let m = g.edge_count();
    assert!(m <= 20, "oracle is limited to 20 edges");
    (0..1u32 << m)
        .filter(|&mask| matching_number_of(g, mask) < r)
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Smallest deletion set size, trying all sets of size 0, 1, 2, … in turn.
pub fn min_deletion_by_size(g: &LabeledGraph, r: usize) -> usize {
    let m = g.edge_count();
    assert!(m <= 20, "oracle is limited to 20 edges");
    let full = (1u32 << m) - 1;
    (0..=m)
        .find(|&size| {
            (0..1u32 << m)
                .filter(|a| a.count_ones() as usize == size)
                .any(|a| matching_number_of(g, full & !a) < r)
        })
        .unwrap_or(m)
}

/// All r-subsets of the edge set that are pairwise disjoint, in the order of
/// their sorted edge lists.
pub fn matchings_by_filter(g: &LabeledGraph, r: usize) -> Vec<Vec<Edge>> {
    let m = g.edge_count();
    assert!(m <= 20, "oracle is limited to 20 edges");
    let edges = g.edges();
    let mut out: Vec<Vec<Edge>> = (0..1u32 << m)
        .filter(|mask| mask.count_ones() as usize == r)
        .map(|mask| (0..m).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect::<Vec<_>>())
        .filter(|set: &Vec<Edge>| {
            set.iter()
                .enumerate()
                .all(|(i, e)| set[i + 1..].iter().all(|f| !e.shares_endpoint(f)))
        })
        .collect();
    out.sort();
    out
}
