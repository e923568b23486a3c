mod common;

use common::small_graph;
use mkneser::graph::{enumerate_matchings, has_r_matching, matching_number, maximum_matching};
use mkneser::verify::oracle;
use mkneser::Matching;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn enumeration_matches_subset_filter(g in small_graph(9, 12), r in 1usize..=5) {
        let got: Vec<Vec<_>> = enumerate_matchings(&g, r).iter().map(|m| m.edges().to_vec()).collect();
        prop_assert_eq!(got, oracle::matchings_by_filter(&g, r));
    }

    #[test]
    fn matching_number_is_largest_enumerable(g in small_graph(10, 12)) {
        let nu = matching_number(&g);
        prop_assert!(nu == 0 || !enumerate_matchings(&g, nu).is_empty());
        prop_assert!(enumerate_matchings(&g, nu + 1).is_empty());
        prop_assert_eq!(nu, oracle::matching_number_of(&g, (1u32 << g.edge_count()) - 1));
    }

    #[test]
    fn maximum_matching_is_a_matching(g in small_graph(12, 16)) {
        let m = maximum_matching(&g);
        prop_assert!(Matching::new(&g, m).is_ok());
    }

    #[test]
    fn enumerated_matchings_are_canonical(g in small_graph(8, 12), r in 1usize..=4) {
        for m in enumerate_matchings(&g, r) {
            prop_assert_eq!(&m.canonicalized(), &m);
            prop_assert_eq!(&Matching::new(&g, m.edges().to_vec()).unwrap(), &m);
        }
    }

    #[test]
    fn has_r_matching_is_monotone(g in small_graph(10, 14), r in 2usize..=6) {
        if has_r_matching(&g, r) {
            prop_assert!(has_r_matching(&g, r - 1));
        }
        prop_assert_eq!(has_r_matching(&g, r), matching_number(&g) >= r);
    }

    #[test]
    fn edge_list_round_trip(g in small_graph(10, 15)) {
        let text = mkneser::graph::write_edge_list(&g);
        prop_assert_eq!(mkneser::graph::parse_edge_list(&text).unwrap(), g);
    }
}

#[test]
fn petersen_minus_two_edges_keeps_perfect_matching() {
    let g = mkneser::petersen();
    let edges = g.edges();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            assert!(has_r_matching(&g.without_edges(&[edges[i], edges[j]]), 5));
        }
    }
}
