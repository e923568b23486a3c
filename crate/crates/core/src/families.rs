//! Graph families: disjoint edges `lK₂`, the bipartite construction with a
//! prescribed gap, its radius-2 trees, and the Petersen graph.

use crate::error::{Error, Result};
use crate::graph::{Edge, LabeledGraph, Role, VertexId};
use crate::subsets::binomial;

/// Parameters `(r, Θ, Γ)` of the construction together with the derived
/// `t = r − 1 − Γ`, `l = Θ + 2Γ` and the number of w-vertices
/// `t·C(l, r − t) + l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    r: usize,
    theta: usize,
    gamma: usize,
    t: usize,
    l: usize,
    w_count: usize,
}

impl FamilyParams {
    pub fn new(r: usize, theta: usize, gamma: usize) -> Result<Self> {
        if r < 3 {
            return Err(Error::Domain(format!("r >= 3 violated (r = {r})")));
        }
        if theta < 1 {
            return Err(Error::Domain("theta >= 1 violated (theta = 0)".into()));
        }
        if gamma < 1 {
            return Err(Error::Domain("gamma >= 1 violated (gamma = 0)".into()));
        }
        if gamma > r - 2 {
            return Err(Error::Domain(format!(
                "gamma <= r - 2 violated (gamma = {gamma}, r = {r})"
            )));
        }
        let t = r - 1 - gamma;
        let l = theta + 2 * gamma;
        let w_count = binomial(l, r - t)
            .and_then(|c| c.checked_mul(t))
            .and_then(|c| c.checked_add(l))
            .ok_or_else(|| Error::Domain("w-block size overflows".into()))?;
        Ok(FamilyParams {
            r,
            theta,
            gamma,
            t,
            l,
            w_count,
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn theta(&self) -> usize {
        self.theta
    }

    pub fn gamma(&self) -> usize {
        self.gamma
    }

    /// Number of z-vertices.
    pub fn t(&self) -> usize {
        self.t
    }

    /// Number of xᵢyᵢ edges.
    pub fn l(&self) -> usize {
        self.l
    }

    pub fn w_count(&self) -> usize {
        self.w_count
    }

    /// Size of the subsets in the Kneser graph `K(l, r − t)`.
    pub fn subset_size(&self) -> usize {
        self.r - self.t
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.l + self.t + self.w_count
    }

    pub fn edge_count(&self) -> usize {
        self.l + self.t * (self.l + self.w_count)
    }

    /// Predicted `|E(G)| − ex(G, rK₂)`.
    pub fn predicted_removal(&self) -> usize {
        self.theta + self.gamma
    }

    // Vertex numbering: x-block, w-block, y-block, z-block, all 1-based.

    pub fn x(&self, i: usize) -> VertexId {
        debug_assert!((1..=self.l).contains(&i));
        i - 1
    }

    pub fn w(&self, k: usize) -> VertexId {
        debug_assert!((1..=self.w_count).contains(&k));
        self.l + k - 1
    }

    pub fn y(&self, i: usize) -> VertexId {
        debug_assert!((1..=self.l).contains(&i));
        self.l + self.w_count + i - 1
    }

    pub fn z(&self, j: usize) -> VertexId {
        debug_assert!((1..=self.t).contains(&j));
        2 * self.l + self.w_count + j - 1
    }

    /// The edge xᵢyᵢ.
    pub fn xy_edge(&self, i: usize) -> Edge {
        Edge {
            u: self.x(i),
            v: self.y(i),
        }
    }

    /// The edge w_k z_j.
    pub fn wz_edge(&self, k: usize, j: usize) -> Edge {
        Edge {
            u: self.w(k),
            v: self.z(j),
        }
    }

    /// Index `i` if `e` is the edge xᵢyᵢ.
    pub fn xy_index(&self, e: &Edge) -> Option<usize> {
        (e.u < self.l && e.v == self.y(e.u + 1)).then_some(e.u + 1)
    }

    pub fn label(&self) -> String {
        format!("r={},theta={},gamma={}", self.r, self.theta, self.gamma)
    }
}

/// `lK₂`: vertices `0..2l`, edges `(2i, 2i + 1)`.
pub fn matching_graph(l: usize) -> LabeledGraph {
    let edges = (0..l)
        .map(|i| Edge {
            u: 2 * i,
            v: 2 * i + 1,
        })
        .collect();
    LabeledGraph::from_edges(2 * l, edges)
}

/// The connected bipartite graph with parts
/// `V₁ = {x₁…x_l} ∪ {w₁…w_W}` and `V₂ = {y₁…y_l} ∪ {z₁…z_t}`, whose edges are
/// the matching xᵢyᵢ plus every edge between `V₁` and the z-vertices.
pub fn shaebani_graph(p: &FamilyParams) -> LabeledGraph {
    let mut edges = Vec::with_capacity(p.edge_count());
    for i in 1..=p.l {
        edges.push(p.xy_edge(i));
    }
    let v1 = (1..=p.l).map(|i| p.x(i)).chain((1..=p.w_count).map(|k| p.w(k)));
    for v in v1 {
        for j in 1..=p.t {
            edges.push(Edge { u: v, v: p.z(j) });
        }
    }
    let roles = (1..=p.l)
        .map(Role::X)
        .chain((1..=p.w_count).map(Role::W))
        .chain((1..=p.l).map(Role::Y))
        .chain((1..=p.t).map(Role::Z))
        .collect();
    LabeledGraph::from_edges(p.vertex_count(), edges)
        .with_roles(roles)
        .expect("construction roles are contiguous")
}

/// The construction with `Γ = r − 2`, which is a tree of radius 2 centred at
/// z₁.
pub fn shaebani_tree(r: usize, theta: usize) -> Result<LabeledGraph> {
    if r < 3 {
        return Err(Error::Domain(format!("r >= 3 violated (r = {r})")));
    }
    let p = FamilyParams::new(r, theta, r - 2)?;
    let g = shaebani_graph(&p);
    if !g.is_tree() || g.radius()? != 2 {
        return Err(Error::Internal(format!("instance {} is not a radius-2 tree", p.label())));
    }
    Ok(g)
}

/// The Petersen graph: outer 5-cycle `0..5`, spokes `{i, i + 5}`, inner
/// pentagram `{5 + i, 5 + (i + 2) mod 5}`.
pub fn petersen() -> LabeledGraph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push(Edge::new(i, (i + 1) % 5).expect("distinct"));
        edges.push(Edge::new(i, i + 5).expect("distinct"));
        edges.push(Edge::new(5 + i, 5 + (i + 2) % 5).expect("distinct"));
    }
    LabeledGraph::from_edges(10, edges)
}
