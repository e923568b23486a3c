mod common;

use common::small_graph;
use mkneser::graph::has_r_matching;
use mkneser::turan::refute_smaller_deletions;
use mkneser::verify::oracle;
use mkneser::{generalized_turan, min_deletion_set, Budget};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn duality_against_brute_force(g in small_graph(8, 12), r in 1usize..=4) {
        let ex = generalized_turan(&g, r, &mut Budget::default()).unwrap();
        prop_assert_eq!(ex, oracle::max_free_subgraph(&g, r));
        prop_assert_eq!(g.edge_count() - ex, oracle::min_deletion_by_size(&g, r));
    }

    #[test]
    fn certificates_leave_no_r_matching(g in small_graph(8, 12), r in 1usize..=4) {
        let cert = min_deletion_set(&g, r, &mut Budget::default()).unwrap();
        prop_assert!(cert.optimal);
        prop_assert!(cert.check(&g).is_ok());
        prop_assert!(!has_r_matching(&g.without_edges(&cert.deleted), r));
        let refuted = refute_smaller_deletions(&g, r, cert.size, &mut Budget::default()).unwrap();
        prop_assert!(refuted.is_ok());
    }

    #[test]
    fn deletion_size_non_increasing_in_r(g in small_graph(8, 12)) {
        let sizes: Vec<usize> = (1..=5)
            .map(|r| min_deletion_set(&g, r, &mut Budget::default()).unwrap().size)
            .collect();
        prop_assert!(sizes.windows(2).all(|w| w[0] >= w[1]), "{:?}", sizes);
    }

    #[test]
    fn lexicographically_least_optimum(g in small_graph(6, 8), r in 1usize..=3) {
        let cert = min_deletion_set(&g, r, &mut Budget::default()).unwrap();
        // brute force: first set in (size, lexicographic) order that works
        let edges = g.edges();
        let m = edges.len();
        let mut best: Option<Vec<mkneser::Edge>> = None;
        for mask in 0u32..1 << m {
            if mask.count_ones() as usize != cert.size {
                continue;
            }
            let set: Vec<_> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
            if !has_r_matching(&g.without_edges(&set), r) && best.as_ref().is_none_or(|b| set < *b) {
                best = Some(set);
            }
        }
        prop_assert_eq!(Some(cert.deleted), best);
    }
}

#[test]
fn disjoint_edges_closed_form() {
    for l in 1..=8 {
        let g = mkneser::matching_graph(l);
        for r in 1..=l {
            let cert = min_deletion_set(&g, r, &mut Budget::default()).unwrap();
            assert_eq!(cert.size, l - r + 1, "{l}K2, r={r}");
        }
    }
}
