mod common;

use common::{find_isomorphism, small_graph};
use mkneser::kneser::DEFAULT_KNESER_CAP;
use mkneser::subsets::{colex_rank, subsets_colex};
use mkneser::{build_matching_kneser, kneser_graph, matching_graph, petersen};
use proptest::prelude::*;

/// Index i of the edge (2i, 2i + 1) of lK₂, as a 1-based subset element.
fn as_subset(m: &mkneser::Matching) -> Vec<usize> {
    m.edges().iter().map(|e| e.u() / 2 + 1).collect()
}

#[test]
fn classical_kneser_matches_disjoint_edge_host() {
    for l in 1..=7 {
        for r in 1..=3.min(l) {
            let kg = build_matching_kneser(&matching_graph(l), r, DEFAULT_KNESER_CAP).unwrap();
            let k = kneser_graph(l, r).unwrap();
            assert_eq!(kg.vertex_count(), k.vertex_count());
            let subsets = subsets_colex(l, r);
            let to_rank: Vec<usize> = kg.vertices().iter().map(|m| colex_rank(&as_subset(m)) - 1).collect();
            let mut seen = to_rank.clone();
            seen.sort_unstable();
            seen.dedup();
            assert_eq!(seen.len(), k.vertex_count(), "rank map is a bijection");
            for i in 0..kg.vertex_count() {
                assert_eq!(subsets[to_rank[i]], as_subset(&kg.vertices()[i]));
                for j in 0..kg.vertex_count() {
                    assert_eq!(kg.is_adjacent(i, j), k.has_edge(to_rank[i], to_rank[j]), "K({l},{r})");
                }
            }
        }
    }
}

#[test]
fn kneser_5_2_is_petersen() {
    assert!(find_isomorphism(&kneser_graph(5, 2).unwrap(), &petersen()).is_some());
    let kg = build_matching_kneser(&matching_graph(5), 2, DEFAULT_KNESER_CAP).unwrap();
    assert!(find_isomorphism(&kg.to_graph(), &petersen()).is_some());
}

#[test]
fn petersen_perfect_matchings_pairwise_intersect() {
    let kg = build_matching_kneser(&petersen(), 5, DEFAULT_KNESER_CAP).unwrap();
    assert_eq!((kg.vertex_count(), kg.edge_count()), (6, 0));
    let vs = kg.vertices();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            assert!(vs[i].edges().iter().any(|e| vs[j].contains(e)));
        }
    }
}

#[test]
fn kneser_2r_minus_1_is_edgeless() {
    let g = kneser_graph(5, 3).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (10, 0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn adjacency_is_edge_disjointness(g in small_graph(8, 12), r in 1usize..=3) {
        let kg = build_matching_kneser(&g, r, DEFAULT_KNESER_CAP).unwrap();
        let vs = kg.vertices();
        for i in 0..vs.len() {
            prop_assert!(!kg.is_adjacent(i, i));
            for j in 0..vs.len() {
                let shared = vs[i].edges().iter().filter(|e| vs[j].contains(e)).count();
                prop_assert_eq!(kg.is_adjacent(i, j), shared == 0 && i != j);
                prop_assert_eq!(kg.is_adjacent(i, j), kg.is_adjacent(j, i));
            }
        }
    }
}
