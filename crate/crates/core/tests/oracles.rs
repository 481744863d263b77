mod common;

use common::{burnside_class_count, check_against_oracles, labelled_class_count, Naive};
use kfree::harness::{enumerate_graphs, Filters};
use kfree::Graph;

fn all_graphs(max: usize) -> Vec<Graph> {
    (1..=max).flat_map(|n| enumerate_graphs(n, Filters::default()).unwrap().into_graphs()).collect()
}

#[test]
fn solvers_match_brute_force_up_to_seven_vertices() {
    for g in all_graphs(7) {
        if let Err(e) = check_against_oracles(&g) {
            panic!("{e}");
        }
    }
}

#[test]
fn class_counts_match_labelled_dedup() {
    for n in 1..=5 {
        assert_eq!(enumerate_graphs(n, Filters::default()).unwrap().len(), labelled_class_count(n), "n = {n}");
    }
}

#[test]
fn class_counts_match_burnside() {
    for n in 4..=8 {
        let got = enumerate_graphs(n, Filters::default()).unwrap().len() as u128;
        assert_eq!(got, burnside_class_count(n), "n = {n}");
    }
}

#[test]
fn enumerated_classes_are_pairwise_non_isomorphic() {
    for n in 1..=6 {
        let graphs = enumerate_graphs(n, Filters::default()).unwrap().into_graphs();
        for (i, a) in graphs.iter().enumerate() {
            for b in &graphs[i + 1..] {
                assert!(kfree::graph::are_isomorphic(a, b).is_none());
            }
        }
    }
}

#[test]
fn filters_match_naive_predicates() {
    let f = Filters { connected: true, min_degree: Some(2), max_degree: Some(4), min_connectivity: Some(2) };
    for n in 1..=7 {
        let all = enumerate_graphs(n, Filters::default()).unwrap().into_graphs();
        let expected = all
            .iter()
            .filter(|g| {
                let o = Naive::new(g);
                let max_deg = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
                o.connected() && o.min_degree() >= 2 && max_deg <= 4 && o.kappa() >= 2
            })
            .count();
        assert_eq!(enumerate_graphs(n, f.clone()).unwrap().len(), expected, "n = {n}");
    }
}
