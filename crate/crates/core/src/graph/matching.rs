use std::collections::VecDeque;
use std::fmt;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::{Edge, LabeledGraph, VertexId};
use crate::error::{Error, Result};

/// A set of pairwise vertex-disjoint edges, kept as a sorted edge list.
///
/// Two matchings are equal iff their sorted lists are equal, and the derived
/// ordering is the lexicographic order of those lists.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    /// Validates `edges` against `host` and returns the canonical matching.
    pub fn new(host: &LabeledGraph, mut edges: Vec<Edge>) -> Result<Self> {
        edges.sort_unstable();
        for (i, e) in edges.iter().enumerate() {
            if !host.contains_edge(e) {
                return Err(Error::Construction(format!("{e} is not an edge of the host")));
            }
            if edges[..i].iter().any(|f| f.shares_endpoint(e)) {
                return Err(Error::Construction(format!(
                    "{e} shares an endpoint with another matching edge"
                )));
            }
        }
        Ok(Matching { edges })
    }

    /// Wraps an edge list the caller guarantees to be sorted and disjoint.
    pub(crate) fn from_sorted(edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        Matching { edges }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    /// Re-sorts the edge list. The identity on any value built by this crate.
    pub fn canonicalized(&self) -> Matching {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        edges.dedup();
        Matching { edges }
    }

    /// True iff the two matchings have no edge in common.
    pub fn is_edge_disjoint(&self, other: &Matching) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.edges.len() && j < other.edges.len() {
            match self.edges[i].cmp(&other.edges[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Visits every `r`-matching of `g` in lexicographic order of sorted edge
/// lists. Each matching is built by extending with edges strictly larger than
/// the last one chosen, so the output is duplicate-free by construction.
pub fn for_each_matching<F>(g: &LabeledGraph, r: usize, mut visit: F)
where
    F: FnMut(&[Edge]) -> ControlFlow<()>,
{
    let mut used = vec![false; g.vertex_count()];
    let mut chosen = Vec::with_capacity(r);
    let _ = extend(g.edges(), 0, r, &mut used, &mut chosen, &mut visit);
}

fn extend<F>(
    edges: &[Edge],
    start: usize,
    r: usize,
    used: &mut [bool],
    chosen: &mut Vec<Edge>,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[Edge]) -> ControlFlow<()>,
{
    if chosen.len() == r {
        return visit(chosen);
    }
    let needed = r - chosen.len();
    for idx in start..edges.len() {
        if edges.len() - idx < needed {
            break;
        }
        let e = edges[idx];
        if used[e.u] || used[e.v] {
            continue;
        }
        used[e.u] = true;
        used[e.v] = true;
        chosen.push(e);
        let flow = extend(edges, idx + 1, r, used, chosen, visit);
        chosen.pop();
        used[e.u] = false;
        used[e.v] = false;
        flow?;
    }
    ControlFlow::Continue(())
}

/// All `r`-matchings of `g`, sorted lexicographically.
pub fn enumerate_matchings(g: &LabeledGraph, r: usize) -> Vec<Matching> {
    let mut out = Vec::new();
    for_each_matching(g, r, |m| {
        out.push(Matching::from_sorted(m.to_vec()));
        ControlFlow::Continue(())
    });
    out
}

pub fn count_matchings(g: &LabeledGraph, r: usize) -> usize {
    let mut count = 0;
    for_each_matching(g, r, |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}

/// Counts r-matchings but stops once the count passes `limit`, so the result
/// is `min(count, limit + 1)`.
pub fn count_matchings_up_to(g: &LabeledGraph, r: usize, limit: usize) -> usize {
    let mut count = 0;
    for_each_matching(g, r, |_| {
        count += 1;
        if count > limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    count
}

/// A maximum matching of `g`, sorted. Deterministic for a fixed graph.
pub fn maximum_matching(g: &LabeledGraph) -> Vec<Edge> {
    Blossom::new(g).grow(usize::MAX)
}

/// Exact matching number ν(g), valid on general graphs.
pub fn matching_number(g: &LabeledGraph) -> usize {
    maximum_matching(g).len()
}

/// True iff `g` has a matching with `r` edges. Augmentation stops as soon as
/// the matching reaches size `r`.
pub fn has_r_matching(g: &LabeledGraph, r: usize) -> bool {
    r == 0 || Blossom::new(g).grow(r).len() >= r
}

/// An `r`-matching of `g` if one exists: the `r` smallest edges of a matching
/// grown to size at least `r`.
pub(crate) fn some_r_matching(g: &LabeledGraph, r: usize) -> Option<Vec<Edge>> {
    let m = Blossom::new(g).grow(r);
    (m.len() >= r).then(|| m[..r].to_vec())
}

const NONE: usize = usize::MAX;

/// Edmonds' augmenting-path search with blossom contraction.
struct Blossom<'g> {
    g: &'g LabeledGraph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g LabeledGraph) -> Self {
        let n = g.vertex_count();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    /// Greedy start, then augment until the matching has `target` edges or
    /// no augmenting path remains.
    fn grow(mut self, target: usize) -> Vec<Edge> {
        let mut size = 0;
        for e in self.g.edges() {
            if size >= target {
                break;
            }
            if self.mate[e.u] == NONE && self.mate[e.v] == NONE {
                self.mate[e.u] = e.v;
                self.mate[e.v] = e.u;
                size += 1;
            }
        }
        for root in 0..self.g.vertex_count() {
            if size >= target {
                break;
            }
            if self.mate[root] == NONE {
                if let Some(end) = self.find_augmenting_path(root) {
                    self.augment(end);
                    size += 1;
                }
            }
        }
        let mut out: Vec<Edge> = (0..self.g.vertex_count())
            .filter(|&v| self.mate[v] != NONE && v < self.mate[v])
            .map(|v| Edge { u: v, v: self.mate[v] })
            .collect();
        out.sort_unstable();
        out
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn lowest_common_base(&self, a: usize, b: usize) -> usize {
        let mut seen = vec![false; self.g.vertex_count()];
        let mut a = a;
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        let mut b = b;
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let m = self.mate[v];
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = child;
            child = m;
            v = self.parent[m];
        }
    }

    fn find_augmenting_path(&mut self, root: VertexId) -> Option<VertexId> {
        let n = self.g.vertex_count();
        self.in_tree.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.in_tree[root] = true;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lowest_common_base(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.in_tree[i] {
                                self.in_tree[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.in_tree[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }
}
