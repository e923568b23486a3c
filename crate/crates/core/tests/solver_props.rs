mod common;

use common::{brute_chi, small_graph};
use mkneser::solvers::is_proper;
use mkneser::{chromatic_number, kneser_graph, lovasz_chi, Budget, LabeledGraph, LowerBound};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn chromatic_number_is_exact(g in small_graph(9, 20)) {
        let cert = chromatic_number(&g, &mut Budget::default()).unwrap();
        prop_assert_eq!(cert.k, brute_chi(&g));
        prop_assert!(cert.check(&g).is_ok());
    }

    #[test]
    fn certificates_are_sound(g in small_graph(12, 30)) {
        let cert = chromatic_number(&g, &mut Budget::default()).unwrap();
        prop_assert!(is_proper(&g, &cert.coloring));
        prop_assert!(cert.check(&g).is_ok());
        prop_assert_eq!(cert.k == 1, g.vertex_count() >= 1 && g.edge_count() == 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn exact_on_sparse_twelve_vertex_graphs(g in small_graph(12, 14)) {
        prop_assert_eq!(chromatic_number(&g, &mut Budget::default()).unwrap().k, brute_chi(&g));
    }
}

#[test]
fn exact_on_twelve_vertex_graphs() {
    // a 12-cycle with three chords closing triangles: chi = 3
    let mut pairs: Vec<_> = (0..12).map(|i| (i, (i + 1) % 12)).collect();
    pairs.extend([(0, 2), (4, 6), (8, 10)]);
    let g = mkneser::make_graph(12, &pairs).unwrap();
    assert_eq!(chromatic_number(&g, &mut Budget::default()).unwrap().k, brute_chi(&g));
}

#[test]
fn closed_form_on_kneser_grid() {
    for r in 1..=3 {
        for l in 2 * r - 1..=8 {
            let g = kneser_graph(l, r).unwrap();
            let cert = chromatic_number(&g, &mut Budget::default()).unwrap();
            assert_eq!(cert.k, lovasz_chi(l, r).unwrap(), "K({l},{r})");
            assert!(cert.check(&g).is_ok());
        }
    }
}

#[test]
fn edgeless_law() {
    for n in 1..6 {
        let cert = chromatic_number(&LabeledGraph::empty(n), &mut Budget::default()).unwrap();
        assert_eq!((cert.k, cert.lower_bound), (1, LowerBound::Edgeless));
    }
}

#[test]
fn certificate_json_round_trip() {
    let g = kneser_graph(5, 2).unwrap();
    let cert = chromatic_number(&g, &mut Budget::default()).unwrap();
    let json = serde_json::to_string(&cert).unwrap();
    assert!(json.contains("\"type\":\"exhaustion\""));
    let back: mkneser::ChiCertificate = serde_json::from_str(&json).unwrap();
    assert_eq!(back, cert);
}
