//! Finite simple undirected graphs with dense vertex ids.
//!
//! Graphs are immutable once built: [`LabeledGraph::without_edges`] returns a
//! new value. Vertex roles are carried as metadata and never influence any
//! algorithm.

mod io;
pub(crate) mod matching;

use std::collections::VecDeque;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use io::{parse_edge_list, write_edge_list};
pub use matching::{
    count_matchings, count_matchings_up_to, enumerate_matchings, for_each_matching, has_r_matching, matching_number,
    maximum_matching, Matching,
};

/// Dense vertex index in `[0, n)`.
pub type VertexId = usize;

/// An undirected edge stored with `u < v`.
///
/// The derived ordering is lexicographic on `(u, v)`, which is the canonical
/// edge order used everywhere in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct Edge {
    pub(crate) u: VertexId,
    pub(crate) v: VertexId,
}

impl Edge {
    /// Canonical edge between `a` and `b`; loops are rejected.
    pub fn new(a: VertexId, b: VertexId) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(Error::Construction(format!("loop at vertex {a}"))),
        }
    }

    pub fn u(&self) -> VertexId {
        self.u
    }

    pub fn v(&self) -> VertexId {
        self.v
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }

    pub fn touches(&self, w: VertexId) -> bool {
        self.u == w || self.v == w
    }

    pub fn shares_endpoint(&self, other: &Edge) -> bool {
        self.touches(other.u) || self.touches(other.v)
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.u, e.v]
    }
}

impl TryFrom<[usize; 2]> for Edge {
    type Error = Error;

    fn try_from(pair: [usize; 2]) -> Result<Self> {
        Edge::new(pair[0], pair[1])
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

/// Construction role of a vertex in a family instance.
///
/// Indices are 1-based, following the usual x₁…x_l naming.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Role {
    X(usize),
    Y(usize),
    Z(usize),
    W(usize),
    Plain,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::X(i) => write!(f, "x{i}"),
            Role::Y(i) => write!(f, "y{i}"),
            Role::Z(j) => write!(f, "z{j}"),
            Role::W(k) => write!(f, "w{k}"),
            Role::Plain => f.write_str("plain"),
        }
    }
}

impl FromStr for Role {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "plain" {
            return Ok(Role::Plain);
        }
        let bad = || Error::Construction(format!("unknown role `{s}`"));
        let mut chars = s.chars();
        let class = chars.next().ok_or_else(bad)?;
        let index: usize = chars.as_str().parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        match class {
            'x' => Ok(Role::X(index)),
            'y' => Ok(Role::Y(index)),
            'z' => Ok(Role::Z(index)),
            'w' => Ok(Role::W(index)),
            _ => Err(bad()),
        }
    }
}

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    n: usize,
    edges: Vec<Edge>,
    roles: Option<Vec<Role>>,
    adj: Vec<Vec<VertexId>>,
}

/// Builds a canonical graph from arbitrary vertex pairs. Duplicate pairs
/// (in either orientation) collapse to one edge.
pub fn make_graph(n: usize, pairs: &[(VertexId, VertexId)]) -> Result<LabeledGraph> {
    let mut edges = Vec::with_capacity(pairs.len());
    for &(a, b) in pairs {
        if a >= n || b >= n {
            return Err(Error::Construction(format!(
                "edge ({a},{b}) has an endpoint outside 0..{n}"
            )));
        }
        edges.push(Edge::new(a, b)?);
    }
    Ok(LabeledGraph::from_edges(n, edges))
}

impl LabeledGraph {
    /// Canonicalizes an edge list whose endpoints are already known to be in
    /// range.
    pub(crate) fn from_edges(n: usize, mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        LabeledGraph {
            n,
            edges,
            roles: None,
            adj,
        }
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        LabeledGraph::from_edges(n, Vec::new())
    }

    /// Attaches construction roles, one per vertex.
    ///
    /// Within each role class the indices must be exactly `1..=count`.
    pub fn with_roles(mut self, roles: Vec<Role>) -> Result<Self> {
        if roles.len() != self.n {
            return Err(Error::Construction(format!(
                "{} roles given for {} vertices",
                roles.len(),
                self.n
            )));
        }
        let mut seen: [Vec<usize>; 4] = Default::default();
        for role in &roles {
            match *role {
                Role::X(i) => seen[0].push(i),
                Role::Y(i) => seen[1].push(i),
                Role::Z(i) => seen[2].push(i),
                Role::W(i) => seen[3].push(i),
                Role::Plain => {}
            }
        }
        for (class, mut indices) in ["x", "y", "z", "w"].into_iter().zip(seen) {
            indices.sort_unstable();
            if indices.iter().enumerate().any(|(pos, &i)| i != pos + 1) {
                return Err(Error::Construction(format!(
                    "{class}-role indices are not exactly 1..={}",
                    indices.len()
                )));
            }
        }
        self.roles = Some(roles);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        a < self.n && b < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    /// Position of `e` in the canonical edge list.
    pub fn edge_index(&self, e: &Edge) -> Option<usize> {
        self.edges.binary_search(e).ok()
    }

    pub fn roles(&self) -> Option<&[Role]> {
        self.roles.as_deref()
    }

    pub fn role(&self, v: VertexId) -> Role {
        self.roles.as_ref().map_or(Role::Plain, |r| r[v])
    }

    /// Vertex carrying `role`, if roles are present.
    pub fn vertex_with_role(&self, role: Role) -> Option<VertexId> {
        self.roles.as_ref()?.iter().position(|&r| r == role)
    }

    /// A new graph on the same vertex set with the listed edges removed.
    /// Edges not present in the graph are ignored.
    pub fn without_edges(&self, removed: &[Edge]) -> LabeledGraph {
        let mut removed = removed.to_vec();
        removed.sort_unstable();
        let kept = self
            .edges
            .iter()
            .filter(|e| removed.binary_search(e).is_err())
            .copied()
            .collect();
        let mut g = LabeledGraph::from_edges(self.n, kept);
        g.roles = self.roles.clone();
        g
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0);
            for &w in &self.adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// True iff the graph has a single component. Graphs with at most one
    /// vertex count as connected.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// A two-coloring of the vertices if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let s = side[v] == Some(true);
                for &w in &self.adj[v] {
                    match side[w] {
                        None => {
                            side[w] = Some(!s);
                            queue.push_back(w);
                        }
                        Some(t) if t == s => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for (v, s) in side.into_iter().enumerate() {
            if s == Some(true) {
                right.push(v);
            } else {
                left.push(v);
            }
        }
        Some(Bipartition { left, right })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.edges.len() == self.n - 1
    }

    /// Minimum eccentricity over all vertices. Fails on disconnected or
    /// vertex-free graphs.
    pub fn radius(&self) -> Result<usize> {
        if self.n == 0 {
            return Err(Error::Domain("radius of the null graph".into()));
        }
        if !self.is_connected() {
            return Err(Error::Domain("radius of a disconnected graph".into()));
        }
        Ok((0..self.n)
            .map(|v| {
                self.distances_from(v)
                    .into_iter()
                    .map(|d| d.unwrap_or(0))
                    .max()
                    .unwrap_or(0)
            })
            .min()
            .unwrap_or(0))
    }
}

/// Read-only adjacency access, implemented both by explicit graphs and by
/// graphs whose edges are computed on demand.
pub trait Adjacency {
    fn order(&self) -> usize;

    fn adjacent(&self, a: VertexId, b: VertexId) -> bool;

    /// Visits every edge `(a, b)` with `a < b`, in lexicographic order.
    fn for_each_edge<F>(&self, mut visit: F) -> ControlFlow<(VertexId, VertexId)>
    where
        F: FnMut(VertexId, VertexId) -> ControlFlow<(VertexId, VertexId)>,
    {
        for a in 0..self.order() {
            for b in a + 1..self.order() {
                if self.adjacent(a, b) {
                    visit(a, b)?;
                }
            }
        }
        ControlFlow::Continue(())
    }
}

impl Adjacency for LabeledGraph {
    fn order(&self) -> usize {
        self.n
    }

    fn adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.has_edge(a, b)
    }

    fn for_each_edge<F>(&self, mut visit: F) -> ControlFlow<(VertexId, VertexId)>
    where
        F: FnMut(VertexId, VertexId) -> ControlFlow<(VertexId, VertexId)>,
    {
        for e in &self.edges {
            visit(e.u, e.v)?;
        }
        ControlFlow::Continue(())
    }
}

/// The two color classes of a bipartite graph. In every component the
/// lowest-numbered vertex lands on the left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub left: Vec<VertexId>,
    pub right: Vec<VertexId>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> LabeledGraph {
        make_graph(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn construction_canonicalizes() {
        let g = p4();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 3);

        let k2 = make_graph(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        assert_eq!(k2.edges()[0], Edge::new(0, 1).unwrap());

        let g = make_graph(3, &[(2, 0), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[Edge::new(0, 1).unwrap(), Edge::new(0, 2).unwrap()]);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(make_graph(3, &[(0, 0)]), Err(Error::Construction(_))));
        assert!(matches!(make_graph(3, &[(0, 3)]), Err(Error::Construction(_))));
    }

    #[test]
    fn connectivity() {
        assert!(p4().is_connected());
        assert!(!make_graph(4, &[(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(LabeledGraph::empty(1).is_connected());
        assert!(LabeledGraph::empty(0).is_connected());
    }

    #[test]
    fn bipartite() {
        let bp = p4().bipartition().unwrap();
        assert_eq!(bp.left, vec![0, 2]);
        assert_eq!(bp.right, vec![1, 3]);
        let k3 = make_graph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(k3.bipartition().is_none());
    }

    #[test]
    fn trees_and_radius() {
        assert!(p4().is_tree());
        assert_eq!(p4().radius().unwrap(), 2);

        let k3 = make_graph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!k3.is_tree());
        assert_eq!(k3.radius().unwrap(), 1);

        let star = make_graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(star.is_tree());
        assert_eq!(star.radius().unwrap(), 1);

        let split = make_graph(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(split.radius().is_err());
    }

    #[test]
    fn roles_must_be_contiguous() {
        let g = make_graph(2, &[(0, 1)]).unwrap();
        assert!(g.clone().with_roles(vec![Role::X(1), Role::Y(1)]).is_ok());
        assert!(g.clone().with_roles(vec![Role::X(1), Role::X(3)]).is_err());
        assert!(g.clone().with_roles(vec![Role::X(2), Role::Plain]).is_err());
        assert!(g.with_roles(vec![Role::X(1)]).is_err());
    }

    #[test]
    fn role_parsing() {
        for role in [Role::X(3), Role::Y(1), Role::Z(2), Role::W(17), Role::Plain] {
            assert_eq!(role.to_string().parse::<Role>().unwrap(), role);
        }
        assert!("x0".parse::<Role>().is_err());
        assert!("q1".parse::<Role>().is_err());
    }

    #[test]
    fn edge_removal_keeps_vertices() {
        let g = p4().without_edges(&[Edge::new(1, 2).unwrap()]);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 2);
        assert!(!g.is_connected());
    }
}
