#![allow(dead_code)]

use mkneser::{make_graph, LabeledGraph};
use proptest::prelude::*;

/// Graphs on `1..=max_n` vertices with at most `max_m` edges.
pub fn small_graph(max_n: usize, max_m: usize) -> impl Strategy<Value = LabeledGraph> {
    (1..=max_n).prop_flat_map(move |n| {
        let pair = (0..n, 0..n);
        prop::collection::vec(pair, 0..=max_m).prop_map(move |pairs| {
            let pairs: Vec<_> = pairs.into_iter().filter(|(a, b)| a != b).collect();
            make_graph(n, &pairs).unwrap()
        })
    })
}

/// Least k admitting a proper coloring, by trying every assignment.
pub fn brute_chi(g: &LabeledGraph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        loop {
            if g.edges().iter().all(|e| colors[e.u()] != colors[e.v()]) {
                return k;
            }
            // odometer increment
            let mut i = 0;
            while i < n && colors[i] == k - 1 {
                colors[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            colors[i] += 1;
        }
    }
    n
}

/// A vertex bijection mapping edges onto edges, by plain backtracking.
pub fn find_isomorphism(a: &LabeledGraph, b: &LabeledGraph) -> Option<Vec<usize>> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    let n = a.vertex_count();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(v: usize, a: &LabeledGraph, b: &LabeledGraph, map: &mut [usize], used: &mut [bool]) -> bool {
        if v == a.vertex_count() {
            return true;
        }
        for t in 0..b.vertex_count() {
            if used[t] || a.degree(v) != b.degree(t) {
                continue;
            }
            let consistent = (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], t));
            if consistent {
                map[v] = t;
                used[t] = true;
                if rec(v + 1, a, b, map, used) {
                    return true;
                }
                used[t] = false;
            }
        }
        false
    }
    rec(0, a, b, &mut map, &mut used).then_some(map)
}
