//! Matching Kneser graphs `(G, rK₂)` and classical Kneser graphs `K(l, r)`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{
    count_matchings_up_to, enumerate_matchings, Adjacency, Edge, LabeledGraph, Matching, VertexId,
};
use crate::subsets::{is_disjoint, subsets_colex};

/// Default limit on the number of vertices of an explicitly built Kneser graph.
pub const DEFAULT_KNESER_CAP: usize = 200_000;

/// The graph whose vertices are the `r`-matchings of a host graph, two of
/// them adjacent when they share no edge.
///
/// Vertex `i` is the `i`-th matching in lexicographic enumeration order.
#[derive(Debug, Clone)]
pub struct MatchingKneserGraph {
    host: LabeledGraph,
    r: usize,
    vertices: Vec<Matching>,
    rows: Vec<Vec<u64>>,
    edge_count: usize,
}

impl MatchingKneserGraph {
    pub fn host(&self) -> &LabeledGraph {
        &self.host
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn vertices(&self) -> &[Matching] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i][j / 64] >> (j % 64) & 1 == 1
    }

    /// The adjacency as a plain graph on vertex indices.
    pub fn to_graph(&self) -> LabeledGraph {
        let mut edges = Vec::with_capacity(self.edge_count);
        let _ = self.for_each_edge(|a, b| {
            edges.push(Edge { u: a, v: b });
            std::ops::ControlFlow::Continue(())
        });
        LabeledGraph::from_edges(self.vertex_count(), edges)
    }
}

impl Adjacency for MatchingKneserGraph {
    fn order(&self) -> usize {
        self.vertices.len()
    }

    fn adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.is_adjacent(a, b)
    }
}

/// A matching Kneser graph whose adjacency is evaluated on demand from the
/// vertex matchings. Used when the explicit graph would exceed the cap.
#[derive(Debug, Clone, Copy)]
pub struct ImplicitKneser<'a> {
    pub vertices: &'a [Matching],
}

impl Adjacency for ImplicitKneser<'_> {
    fn order(&self) -> usize {
        self.vertices.len()
    }

    fn adjacent(&self, a: VertexId, b: VertexId) -> bool {
        a != b && self.vertices[a].is_edge_disjoint(&self.vertices[b])
    }
}

/// Exact counts are reported up to this many r-matchings.
const EXACT_COUNT_LIMIT: usize = 10_000_000;

/// The size error for `G` having more than `cap` r-matchings. The count is
/// exact when it is at most [`EXACT_COUNT_LIMIT`].
pub(crate) fn too_many_matchings(g: &LabeledGraph, r: usize, cap: usize) -> Error {
    let limit = EXACT_COUNT_LIMIT.max(cap);
    let count = count_matchings_up_to(g, r, limit);
    Error::TooLarge {
        what: "r-matchings",
        count: count.min(limit),
        cap,
        at_least: count > limit,
    }
}

/// Builds `(G, rK₂)` with explicit adjacency, refusing when `G` has more than
/// `cap` r-matchings.
pub fn build_matching_kneser(g: &LabeledGraph, r: usize, cap: usize) -> Result<MatchingKneserGraph> {
    if r == 0 {
        return Err(Error::Domain("matching size r must be at least 1".into()));
    }
    let count = count_matchings_up_to(g, r, cap);
    if count > cap {
        return Err(too_many_matchings(g, r, cap));
    }
    let vertices = enumerate_matchings(g, r);
    let n = vertices.len();
    let words = n.div_ceil(64);
    let mut rows = vec![vec![0u64; words]; n];
    let mut edge_count = 0;
    for i in 0..n {
        for j in i + 1..n {
            if vertices[i].is_edge_disjoint(&vertices[j]) {
                rows[i][j / 64] |= 1 << (j % 64);
                rows[j][i / 64] |= 1 << (i % 64);
                edge_count += 1;
            }
        }
    }
    Ok(MatchingKneserGraph {
        host: g.clone(),
        r,
        vertices,
        rows,
        edge_count,
    })
}

/// The Kneser graph `K(l, r)`: vertices are the r-subsets of `{1, …, l}` in
/// colex rank order (vertex `i` has rank `i + 1`), adjacent when disjoint.
pub fn kneser_graph(l: usize, r: usize) -> Result<LabeledGraph> {
    if r == 0 || l < r {
        return Err(Error::Domain(format!("K({l}, {r}) needs l >= r >= 1")));
    }
    let subsets = subsets_colex(l, r);
    let mut edges = Vec::new();
    for i in 0..subsets.len() {
        for j in i + 1..subsets.len() {
            if is_disjoint(&subsets[i], &subsets[j]) {
                edges.push(Edge { u: i, v: j });
            }
        }
    }
    Ok(LabeledGraph::from_edges(subsets.len(), edges))
}

/// Sidecar listing: one line `i: (u,v) (u,v) ...` per Kneser vertex.
pub fn write_vertex_map(k: &MatchingKneserGraph) -> String {
    let mut out = String::new();
    for (i, m) in k.vertices.iter().enumerate() {
        let _ = writeln!(out, "{i}: {m}");
    }
    out
}
