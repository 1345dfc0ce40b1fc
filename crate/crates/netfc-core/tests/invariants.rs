//! Property-based invariants: entropy symmetry, isomorphism invariance of
//! the complexity value and the canonical key, enumerator/brute-force
//! agreement, reach monotonicity, and serialization round trips.

use proptest::prelude::*;

use netfc_core::{
    brute_force_connected_subsets, build_graph, canonical_form, census,
    enumerate_connected_subgraphs, functional_complexity, is_connected, node_entropy,
    parse_edge_list, reach_count, write_edge_list, Graph, NodeSet,
};

fn pair_list(n: usize) -> Vec<(usize, usize)> {
    let mut ps = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            ps.push((u, v));
        }
    }
    ps
}

fn graph_from_mask(n: usize, raw: u64) -> Graph {
    let pairs = pair_list(n);
    let mask = raw & ((1u64 << pairs.len()) - 1);
    let edges: Vec<(usize, usize)> =
        pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p).collect();
    build_graph(n, &edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>()).prop_map(|(n, raw)| graph_from_mask(n, raw))
}

fn arb_graph_with_permutation(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.node_count();
        let perm = Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
        (Just(g), perm)
    })
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> =
        g.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
    build_graph(g.node_count(), &edges).unwrap()
}

proptest! {
    #[test]
    fn entropy_is_symmetric_and_bounded(p in 0.0f64..=1.0) {
        let h = node_entropy(p).unwrap();
        let mirrored = node_entropy(1.0 - p).unwrap();
        prop_assert!((h - mirrored).abs() <= 1e-12);
        prop_assert!((0.0..=1.0 + 1e-12).contains(&h));
    }

    #[test]
    fn complexity_is_isomorphism_invariant((g, perm) in arb_graph_with_permutation(7)) {
        let original = functional_complexity(&g);
        let relabeled = functional_complexity(&relabel(&g, &perm));
        prop_assert!((original.complexity - relabeled.complexity).abs() <= 1e-9);
        prop_assert_eq!(original.max_scale, relabeled.max_scale);
        prop_assert_eq!(original.census.counts_by_size(), relabeled.census.counts_by_size());
    }

    #[test]
    fn canonical_key_is_isomorphism_invariant((g, perm) in arb_graph_with_permutation(7)) {
        prop_assert_eq!(
            canonical_form(&g).unwrap(),
            canonical_form(&relabel(&g, &perm)).unwrap()
        );
    }

    #[test]
    fn enumerator_agrees_with_brute_force(g in arb_graph(9)) {
        for j in 1..=g.node_count() {
            let mut streamed: Vec<NodeSet> =
                enumerate_connected_subgraphs(&g, j).unwrap().collect();
            streamed.sort_unstable();
            prop_assert_eq!(streamed, brute_force_connected_subsets(&g, j).unwrap());
        }
    }

    #[test]
    fn reach_grows_with_scale(g in arb_graph(8), source_pick in 0usize..8) {
        let n = g.node_count();
        let source = source_pick % n;
        let full = NodeSet::new((1u64 << n) - 1);
        let mut previous = 0;
        for r in 0..=n {
            let reach = reach_count(&g, full, source, r).unwrap();
            prop_assert!(reach >= previous);
            prop_assert!(reach <= n);
            previous = reach;
        }
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(10)) {
        let text = write_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(g, back);
    }

    #[test]
    fn report_is_internally_consistent(g in arb_graph(7)) {
        let report = functional_complexity(&g);
        prop_assert!(report.complexity >= 0.0);
        prop_assert_eq!(report.curves.len(), report.max_scale.saturating_sub(1));
        let mut deviation_total = 0.0;
        for curve in &report.curves {
            prop_assert_eq!(curve.sizes.first().copied(), Some(curve.scale + 1));
            prop_assert_eq!(curve.sizes.last().copied(), Some(g.node_count()));
            for k in 0..curve.sizes.len() {
                prop_assert!(curve.deviation[k] >= 0.0);
                prop_assert!(
                    (curve.deviation[k]
                        - (curve.average_information[k] - curve.linear_reference[k]).abs())
                    .abs()
                        <= 1e-12
                );
                deviation_total += curve.deviation[k];
            }
            if is_connected(&g) {
                prop_assert_eq!(*curve.deviation.last().unwrap(), 0.0);
            }
        }
        if report.max_scale >= 2 {
            let expected = deviation_total / (report.max_scale - 1) as f64;
            prop_assert!((report.complexity - expected).abs() <= 1e-9);
        } else {
            prop_assert_eq!(report.complexity, 0.0);
        }
    }

    #[test]
    fn census_counts_basics(g in arb_graph(9)) {
        let c = census(&g);
        prop_assert_eq!(c.beta(1), g.node_count() as u64);
        prop_assert_eq!(c.beta(2), g.edge_count() as u64);
        prop_assert_eq!(c.beta(0), 0);
        prop_assert_eq!(c.beta(g.node_count() + 1), 0);
        if is_connected(&g) {
            prop_assert_eq!(c.beta(g.node_count()), 1);
        }
    }
}
