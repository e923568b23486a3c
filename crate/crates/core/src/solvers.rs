//! Exact chromatic numbers with checkable certificates.
//!
//! The search is a DSATUR-style backtracking: always branch on the uncolored
//! vertex with the most distinct neighbor colors (lowest index on ties), try
//! colors in increasing order and never open more than one new color at a
//! time. The last rule pins the first branching vertex to color 0.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, VertexId};
use crate::homcert::HomWitness;

/// Why the chromatic number is at least `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum LowerBound {
    /// The graph has no vertices.
    Empty,
    /// At least one vertex and no edges, so `k = 1`.
    Edgeless,
    /// `k` pairwise adjacent vertices.
    Clique { vertices: Vec<VertexId> },
    /// The exhaustive search for a coloring with `refuted_colors` colors
    /// completed without finding one.
    Exhaustion { refuted_colors: usize },
    /// A homomorphism into this graph from a graph of chromatic number `k`.
    Homomorphism {
        source: String,
        source_chi: usize,
        witness: HomWitness,
    },
}

/// Proof that a graph has chromatic number exactly `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiCertificate {
    pub k: usize,
    pub coloring: Vec<usize>,
    pub lower_bound: LowerBound,
}

impl ChiCertificate {
    /// Checks the parts of the certificate that can be verified without
    /// search: the coloring is proper and uses exactly `k` colors, and the
    /// empty/edgeless/clique witnesses hold in `g`.
    pub fn check(&self, g: &LabeledGraph) -> std::result::Result<(), String> {
        if self.coloring.len() != g.vertex_count() {
            return Err(format!(
                "coloring covers {} of {} vertices",
                self.coloring.len(),
                g.vertex_count()
            ));
        }
        if let Some(e) = g.edges().iter().find(|e| self.coloring[e.u()] == self.coloring[e.v()]) {
            return Err(format!("edge {e} is monochromatic"));
        }
        if colors_used(&self.coloring) != self.k || self.coloring.iter().any(|&c| c >= self.k) {
            return Err(format!("coloring does not use exactly the colors 0..{}", self.k));
        }
        match &self.lower_bound {
            LowerBound::Empty if g.vertex_count() != 0 => Err("graph is not empty".into()),
            LowerBound::Edgeless if g.vertex_count() == 0 || g.edge_count() != 0 => {
                Err("graph is not a nonempty edgeless graph".into())
            }
            LowerBound::Clique { vertices } => {
                if vertices.len() != self.k {
                    return Err(format!("clique has {} vertices, k = {}", vertices.len(), self.k));
                }
                for (i, &a) in vertices.iter().enumerate() {
                    for &b in &vertices[i + 1..] {
                        if !g.has_edge(a, b) {
                            return Err(format!("clique vertices {a} and {b} are not adjacent"));
                        }
                    }
                }
                Ok(())
            }
            LowerBound::Exhaustion { refuted_colors } if *refuted_colors + 1 != self.k => {
                Err("exhaustion must refute exactly k - 1 colors".into())
            }
            LowerBound::Homomorphism { source_chi, .. } if *source_chi != self.k => {
                Err("homomorphism source has a different chromatic number".into())
            }
            _ => Ok(()),
        }
    }
}

pub fn colors_used(coloring: &[usize]) -> usize {
    let mut seen: Vec<usize> = coloring.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

pub fn is_proper(g: &LabeledGraph, coloring: &[usize]) -> bool {
    coloring.len() == g.vertex_count() && g.edges().iter().all(|e| coloring[e.u()] != coloring[e.v()])
}

/// A proper coloring with colors in `0..k`, or `None` if none exists.
/// Returns [`Error::Timeout`] when the budget runs out before the search
/// completes.
pub fn is_k_colorable(g: &LabeledGraph, k: usize, budget: &mut Budget) -> Result<Option<Vec<usize>>> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    if g.edge_count() == 0 {
        return Ok(Some(vec![0; n]));
    }
    let mut search = Dsatur::new(g, k);
    if search.run(0, 0, budget)? {
        Ok(Some(search.color.into_iter().map(|c| c as usize).collect()))
    } else {
        Ok(None)
    }
}

const UNCOLORED: u32 = u32::MAX;

struct Dsatur<'g> {
    g: &'g LabeledGraph,
    k: usize,
    color: Vec<u32>,
    /// `forbid[v * k + c]`: colored neighbors of `v` with color `c`.
    forbid: Vec<u32>,
    /// Number of distinct colors among the colored neighbors of each vertex.
    saturation: Vec<usize>,
}

impl<'g> Dsatur<'g> {
    fn new(g: &'g LabeledGraph, k: usize) -> Self {
        let n = g.vertex_count();
        Dsatur {
            g,
            k,
            color: vec![UNCOLORED; n],
            forbid: vec![0; n * k],
            saturation: vec![0; n],
        }
    }

    fn pick(&self) -> Option<VertexId> {
        let mut best: Option<VertexId> = None;
        for v in 0..self.color.len() {
            if self.color[v] != UNCOLORED {
                continue;
            }
            if best.is_none_or(|b| self.saturation[v] > self.saturation[b]) {
                best = Some(v);
            }
        }
        best
    }

    /// Colors `v` with `c`; returns false if some uncolored neighbor is left
    /// without any available color. The assignment is applied either way.
    fn assign(&mut self, v: VertexId, c: usize) -> bool {
        self.color[v] = c as u32;
        let mut alive = true;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.forbid[w * self.k + c];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
            if self.color[w] == UNCOLORED && self.saturation[w] == self.k {
                alive = false;
            }
        }
        alive
    }

    fn unassign(&mut self, v: VertexId, c: usize) {
        self.color[v] = UNCOLORED;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.forbid[w * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn run(&mut self, colored: usize, used: usize, budget: &mut Budget) -> Result<bool> {
        if colored == self.color.len() {
            return Ok(true);
        }
        budget.tick()?;
        let Some(v) = self.pick() else {
            return Ok(true);
        };
        let limit = self.k.min(used + 1);
        for c in 0..limit {
            if self.forbid[v * self.k + c] > 0 {
                continue;
            }
            let alive = self.assign(v, c);
            if alive && self.run(colored + 1, used.max(c + 1), budget)? {
                return Ok(true);
            }
            self.unassign(v, c);
        }
        Ok(false)
    }
}

/// Greedy clique: scan vertices by decreasing degree (lowest index first on
/// ties) and keep each one adjacent to everything kept so far.
pub fn greedy_clique(g: &LabeledGraph) -> Vec<VertexId> {
    let mut order: Vec<VertexId> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut clique: Vec<VertexId> = Vec::new();
    for v in order {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    clique.sort_unstable();
    clique
}

/// Exact chromatic number with a certificate. Never reports a value it has
/// not proven; a budget overrun surfaces as [`Error::Timeout`].
pub fn chromatic_number(g: &LabeledGraph, budget: &mut Budget) -> Result<ChiCertificate> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(ChiCertificate {
            k: 0,
            coloring: Vec::new(),
            lower_bound: LowerBound::Empty,
        });
    }
    if g.edge_count() == 0 {
        return Ok(ChiCertificate {
            k: 1,
            coloring: vec![0; n],
            lower_bound: LowerBound::Edgeless,
        });
    }
    let clique = greedy_clique(g);
    let mut k = clique.len().max(2);
    loop {
        if let Some(coloring) = is_k_colorable(g, k, budget)? {
            let lower_bound = if k == clique.len() {
                LowerBound::Clique { vertices: clique }
            } else {
                LowerBound::Exhaustion { refuted_colors: k - 1 }
            };
            return Ok(ChiCertificate {
                k,
                coloring,
                lower_bound,
            });
        }
        k += 1;
        if k > n {
            return Err(Error::Internal(format!("no proper coloring with {n} colors")));
        }
    }
}

/// χ(K(l, r)) = l − 2r + 2, asserted only for `l ≥ 2r − 1`.
pub fn lovasz_chi(l: usize, r: usize) -> Result<usize> {
    if r == 0 || l + 1 < 2 * r {
        return Err(Error::Domain(format!(
            "closed form needs r >= 1 and l >= 2r - 1 (got l = {l}, r = {r})"
        )));
    }
    Ok(l + 2 - 2 * r)
}

/// DIMACS coloring instance: `p edge n m` followed by 1-based `e u v` lines.
pub fn write_dimacs(g: &LabeledGraph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(out, "e {} {}", e.u() + 1, e.v() + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_graph;
    use crate::kneser::kneser_graph;

    fn complete(n: usize) -> LabeledGraph {
        let mut pairs = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                pairs.push((a, b));
            }
        }
        make_graph(n, &pairs).unwrap()
    }

    fn budget() -> Budget {
        Budget::default()
    }

    #[test]
    fn triangle_colorability() {
        let k3 = complete(3);
        assert_eq!(is_k_colorable(&k3, 2, &mut budget()).unwrap(), None);
        let c = is_k_colorable(&k3, 3, &mut budget()).unwrap().unwrap();
        assert!(is_proper(&k3, &c));
    }

    #[test]
    fn petersen_three_colorable() {
        let p = kneser_graph(5, 2).unwrap();
        let c = is_k_colorable(&p, 3, &mut budget()).unwrap().unwrap();
        assert!(is_proper(&p, &c));
        assert_eq!(is_k_colorable(&p, 2, &mut budget()).unwrap(), None);
    }

    #[test]
    fn edgeless_and_empty() {
        let cert = chromatic_number(&LabeledGraph::empty(6), &mut budget()).unwrap();
        assert_eq!(cert.k, 1);
        assert_eq!(cert.lower_bound, LowerBound::Edgeless);
        assert!(cert.check(&LabeledGraph::empty(6)).is_ok());

        let cert = chromatic_number(&LabeledGraph::empty(0), &mut budget()).unwrap();
        assert_eq!(cert.k, 0);
        assert_eq!(cert.lower_bound, LowerBound::Empty);
    }

    #[test]
    fn petersen_chi_three_by_exhaustion() {
        let p = kneser_graph(5, 2).unwrap();
        let cert = chromatic_number(&p, &mut budget()).unwrap();
        assert_eq!(cert.k, 3);
        assert_eq!(cert.lower_bound, LowerBound::Exhaustion { refuted_colors: 2 });
        assert!(cert.check(&p).is_ok());
    }

    #[test]
    fn k4_clique_witness() {
        let k4 = complete(4);
        let cert = chromatic_number(&k4, &mut budget()).unwrap();
        assert_eq!(cert.k, 4);
        assert_eq!(cert.lower_bound, LowerBound::Clique { vertices: vec![0, 1, 2, 3] });
        assert!(cert.check(&k4).is_ok());
    }

    #[test]
    fn bad_certificates_are_caught() {
        let k3 = complete(3);
        let cert = ChiCertificate {
            k: 3,
            coloring: vec![0, 1, 1],
            lower_bound: LowerBound::Clique { vertices: vec![0, 1, 2] },
        };
        assert!(cert.check(&k3).is_err());
        let cert = ChiCertificate {
            k: 2,
            coloring: vec![0, 1, 2],
            lower_bound: LowerBound::Exhaustion { refuted_colors: 1 },
        };
        assert!(cert.check(&k3).is_err());
    }

    #[test]
    fn closed_form() {
        assert_eq!(lovasz_chi(5, 2).unwrap(), 3);
        assert_eq!(lovasz_chi(7, 3).unwrap(), 3);
        for r in 1..6 {
            assert_eq!(lovasz_chi(2 * r - 1, r).unwrap(), 1);
        }
        assert!(lovasz_chi(4, 3).is_err());
        assert!(lovasz_chi(4, 0).is_err());
    }

    #[test]
    fn timeout_is_reported() {
        let g = kneser_graph(8, 3).unwrap();
        let mut b = Budget::new(std::time::Duration::ZERO);
        assert!(is_k_colorable(&g, 3, &mut b).unwrap_err().is_timeout());
        assert!(chromatic_number(&g, &mut Budget::new(std::time::Duration::ZERO))
            .unwrap_err()
            .is_timeout());
    }

    #[test]
    fn dimacs_is_one_based() {
        let g = make_graph(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(write_dimacs(&g), "p edge 3 2\ne 1 2\ne 2 3\n");
    }
}
