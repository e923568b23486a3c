//! Generalized Turán numbers `ex(G, rK₂)` through minimum edge deletion.
//!
//! `|E(G)| − ex(G, rK₂)` is the fewest edges whose removal leaves no
//! r-matching. A deletion set must hit every r-matching, so the search picks
//! an r-matching of the current graph and branches on which of its edges to
//! delete, forbidding the edges tried in earlier sibling branches. Every
//! deletion set of the target size is reached exactly once, which lets the
//! solver return the lexicographically least optimum.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::matching::some_r_matching;
use crate::graph::{has_r_matching, matching_number, Edge, LabeledGraph};

/// An edge set whose removal destroys every r-matching.
///
/// `optimal == false` marks a best-known upper bound from an interrupted
/// search; it is never presented as the minimum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeletionCertificate {
    pub r: usize,
    pub deleted: Vec<Edge>,
    pub size: usize,
    pub optimal: bool,
}

impl DeletionCertificate {
    fn new(r: usize, mut deleted: Vec<Edge>, optimal: bool) -> Self {
        deleted.sort_unstable();
        DeletionCertificate {
            r,
            size: deleted.len(),
            deleted,
            optimal,
        }
    }

    /// Checks membership in `g` and that `g − deleted` has no r-matching.
    pub fn check(&self, g: &LabeledGraph) -> std::result::Result<(), String> {
        if self.size != self.deleted.len() {
            return Err("size field disagrees with the edge list".into());
        }
        if let Some(e) = self.deleted.iter().find(|e| !g.contains_edge(e)) {
            return Err(format!("{e} is not an edge of the graph"));
        }
        if has_r_matching(&g.without_edges(&self.deleted), self.r) {
            return Err(format!("the remainder still has a {}-matching", self.r));
        }
        Ok(())
    }
}

/// Minimum deletion set leaving no r-matching.
///
/// On budget overrun the result carries the greedy upper bound with
/// `optimal = false`.
pub fn min_deletion_set(g: &LabeledGraph, r: usize, budget: &mut Budget) -> Result<DeletionCertificate> {
    if r == 0 {
        return Err(Error::Domain("matching size r must be at least 1".into()));
    }
    if !has_r_matching(g, r) {
        return Ok(DeletionCertificate::new(r, Vec::new(), true));
    }

    let upper = greedy_deletion(g, r);
    // each deleted edge lowers the matching number by at most one
    let lower = matching_number(g) + 1 - r;

    for k in lower..=upper.len() {
        let mut found = BTreeSet::new();
        let mut chosen = Vec::with_capacity(k);
        let mut forbidden = Vec::new();
        match branch(g, r, k, &mut chosen, &mut forbidden, &mut found, budget) {
            Ok(()) => {}
            Err(e) if e.is_timeout() => return Ok(DeletionCertificate::new(r, upper, false)),
            Err(e) => return Err(e),
        }
        if let Some(best) = found.into_iter().next() {
            return Ok(DeletionCertificate::new(r, best, true));
        }
    }
    Err(Error::Internal(format!(
        "no deletion set of size at most {} found although a greedy one exists",
        upper.len()
    )))
}

/// `ex(G, rK₂) = |E(G)| − (minimum deletion size)`. Fails with
/// [`Error::Timeout`] if optimality could not be established.
pub fn generalized_turan(g: &LabeledGraph, r: usize, budget: &mut Budget) -> Result<usize> {
    let cert = min_deletion_set(g, r, budget)?;
    if !cert.optimal {
        return Err(Error::Timeout(budget.limit()));
    }
    Ok(g.edge_count() - cert.size)
}

fn greedy_deletion(g: &LabeledGraph, r: usize) -> Vec<Edge> {
    let mut deleted = Vec::new();
    let mut cur = g.clone();
    while let Some(m) = some_r_matching(&cur, r) {
        deleted.push(m[0]);
        cur = cur.without_edges(&[m[0]]);
    }
    deleted
}

fn branch(
    g: &LabeledGraph,
    r: usize,
    k: usize,
    chosen: &mut Vec<Edge>,
    forbidden: &mut Vec<Edge>,
    found: &mut BTreeSet<Vec<Edge>>,
    budget: &mut Budget,
) -> Result<()> {
    budget.tick()?;
    let rest = g.without_edges(chosen);
    let Some(m) = some_r_matching(&rest, r) else {
        let mut set = chosen.clone();
        set.sort_unstable();
        found.insert(set);
        return Ok(());
    };
    if chosen.len() == k {
        return Ok(());
    }
    let depth = forbidden.len();
    for e in m {
        if forbidden.contains(&e) {
            continue;
        }
        chosen.push(e);
        branch(g, r, k, chosen, forbidden, found, budget)?;
        chosen.pop();
        forbidden.push(e);
    }
    forbidden.truncate(depth);
    Ok(())
}

/// Confirms by brute force that no edge set with between 1 and `size − 1`
/// edges destroys every r-matching. Returns how many sets were checked.
pub fn refute_smaller_deletions(
    g: &LabeledGraph,
    r: usize,
    size: usize,
    budget: &mut Budget,
) -> Result<std::result::Result<usize, Vec<Edge>>> {
    if size > 0 && !has_r_matching(g, r) {
        return Ok(Err(Vec::new()));
    }
    let edges = g.edges();
    let mut checked = 0;
    for s in 1..size {
        let mut idx: Vec<usize> = (0..s).collect();
        if s > edges.len() {
            break;
        }
        loop {
            budget.tick()?;
            let subset: Vec<Edge> = idx.iter().map(|&i| edges[i]).collect();
            checked += 1;
            if !has_r_matching(&g.without_edges(&subset), r) {
                return Ok(Err(subset));
            }
            if !next_combination(&mut idx, edges.len()) {
                break;
            }
        }
    }
    Ok(Ok(checked))
}

/// Advances `idx` to the next s-combination of `0..n` in lexicographic order.
pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let s = idx.len();
    for i in (0..s).rev() {
        if idx[i] < n - s + i {
            idx[i] += 1;
            for j in i + 1..s {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_graph;

    fn disjoint_edges(l: usize) -> LabeledGraph {
        let pairs: Vec<_> = (0..l).map(|i| (2 * i, 2 * i + 1)).collect();
        make_graph(2 * l, &pairs).unwrap()
    }

    fn petersen() -> LabeledGraph {
        let mut pairs = Vec::new();
        for i in 0..5 {
            pairs.push((i, (i + 1) % 5));
            pairs.push((i, i + 5));
            pairs.push((5 + i, 5 + (i + 2) % 5));
        }
        make_graph(10, &pairs).unwrap()
    }

    fn p4() -> LabeledGraph {
        make_graph(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn independent_edges() {
        let g = disjoint_edges(7);
        let cert = min_deletion_set(&g, 3, &mut Budget::default()).unwrap();
        assert_eq!(cert.size, 5);
        assert!(cert.optimal);
        assert!(cert.check(&g).is_ok());
        // the five smallest edges form the lexicographically least optimum
        assert_eq!(cert.deleted, g.edges()[..5].to_vec());
        assert_eq!(generalized_turan(&g, 3, &mut Budget::default()).unwrap(), 2);
    }

    #[test]
    fn nothing_to_delete() {
        let cert = min_deletion_set(&p4(), 3, &mut Budget::default()).unwrap();
        assert_eq!(cert.size, 0);
        assert!(cert.optimal);
        assert_eq!(generalized_turan(&p4(), 3, &mut Budget::default()).unwrap(), 3);
    }

    #[test]
    fn p4_middle_edge() {
        let cert = min_deletion_set(&p4(), 2, &mut Budget::default()).unwrap();
        assert_eq!(cert.size, 1);
        // deleting (0,1) or (2,3) works, deleting (1,2) does not
        assert_eq!(cert.deleted, vec![Edge::new(0, 1).unwrap()]);
    }

    #[test]
    fn petersen_needs_three() {
        let g = petersen();
        let cert = min_deletion_set(&g, 5, &mut Budget::default()).unwrap();
        assert_eq!(cert.size, 3);
        assert!(cert.check(&g).is_ok());
        assert_eq!(generalized_turan(&g, 5, &mut Budget::default()).unwrap(), 12);
        let checked = refute_smaller_deletions(&g, 5, 3, &mut Budget::default())
            .unwrap()
            .unwrap();
        assert_eq!(checked, 15 + 105);
    }

    #[test]
    fn rejects_r_zero() {
        assert!(min_deletion_set(&p4(), 0, &mut Budget::default()).is_err());
    }

    #[test]
    fn combinations() {
        let mut idx = vec![0, 1];
        let mut all = vec![idx.clone()];
        while next_combination(&mut idx, 4) {
            all.push(idx.clone());
        }
        assert_eq!(all.len(), 6);
        assert_eq!(all.last().unwrap(), &vec![2, 3]);
    }

    #[test]
    fn certificate_json_shape() {
        let cert = DeletionCertificate::new(2, vec![Edge::new(1, 2).unwrap()], true);
        let json = serde_json::to_string(&cert).unwrap();
        assert_eq!(json, r#"{"r":2,"deleted":[[1,2]],"size":1,"optimal":true}"#);
        let back: DeletionCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);
    }
}
