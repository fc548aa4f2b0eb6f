use proptest::prelude::*;

use pathdom::domination::{
    classify_vertices, gamma, gamma_constrained, independent_domination, is_dominating,
    private_neighbors, ConstrainedQuery,
};
use pathdom::io::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
use pathdom::oracle::Oracle;
use pathdom::path_addition::{gamma_after_addition, pa_direct};
use pathdom::{Graph, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
            move |bits| {
                let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
                Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap()
            },
        )
    })
}

/// Smallest dominating set size by testing subsets in ascending size.
fn naive_gamma(g: &Graph) -> usize {
    let n = g.order();
    (0u32..1 << n)
        .filter(|&m| {
            let s: VertexSet = (0..n).filter(|&v| m >> v & 1 == 1).collect();
            g.closed_neighbors_of_set(s) == g.vertices()
        })
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_round_trip(g in graph(40)) {
        let code = emit_graph6(&g);
        let back = parse_graph6(&code).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(emit_graph6(&back), code);
    }

    #[test]
    fn edge_list_round_trip(g in graph(12)) {
        prop_assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn gamma_matches_subset_search(g in graph(9)) {
        let (k, d) = gamma(&g);
        prop_assert_eq!(k, naive_gamma(&g));
        prop_assert_eq!(d.len(), k);
        prop_assert!(is_dominating(&g, d));
    }

    #[test]
    fn constrained_search_is_monotone(g in graph(8), a in any::<u8>(), b in any::<u8>()) {
        let n = g.order();
        let free = gamma_constrained(&g, ConstrainedQuery::default()).unwrap();
        prop_assert_eq!(free, Some(gamma(&g).0));
        let mask = |m: u8| -> VertexSet { (0..n).filter(|&v| m >> v & 1 == 1).collect() };
        let small = mask(a & b);
        let big = mask(a);
        let c_small = gamma_constrained(&g, ConstrainedQuery::including(small)).unwrap();
        let c_big = gamma_constrained(&g, ConstrainedQuery::including(big)).unwrap();
        // forcing more vertices in never helps
        prop_assert!(c_small <= c_big);
        let ex_small = ConstrainedQuery::new(VertexSet::EMPTY, small).unwrap();
        let ex_big = ConstrainedQuery::new(VertexSet::EMPTY, big).unwrap();
        let (e_small, e_big) = (gamma_constrained(&g, ex_small).unwrap(), gamma_constrained(&g, ex_big).unwrap());
        // None (infeasible) orders above every size
        prop_assert!(e_big.is_none() || e_small.is_some_and(|x| Some(x) <= e_big));
    }

    #[test]
    fn independent_domination_bounds(g in graph(9)) {
        let (i, d) = independent_domination(&g);
        prop_assert!(is_dominating(&g, d) && g.is_independent(d));
        prop_assert_eq!(d.len(), i);
        prop_assert!(i >= gamma(&g).0);
    }

    #[test]
    fn strong_equality_via_edges(g in graph(8)) {
        let r = classify_vertices(&g);
        let no_edge_in_gamma_set = g.edges().all(|(u, v)| {
            gamma_constrained(&g, ConstrainedQuery::including(VertexSet::from([u, v]))).unwrap() > Some(r.gamma)
        });
        prop_assert_eq!(r.strong_equality, no_edge_in_gamma_set);
    }

    #[test]
    fn private_neighbors_of_minimum_sets(g in graph(9)) {
        // every member of a γ-set has a private neighbor, else dropping it
        // would give a smaller dominating set
        let (_, d) = gamma(&g);
        for x in d.iter() {
            prop_assert!(!private_neighbors(&g, x, d).unwrap().is_empty());
        }
    }

    #[test]
    fn predicted_pa_matches_direct(g in graph(7)) {
        prop_assume!(g.order() >= 2);
        let o = Oracle::new(&g);
        for (u, v) in g.pairs() {
            prop_assert_eq!(o.predict_pa(u, v).unwrap(), pa_direct(&g, u, v).unwrap());
        }
    }

    #[test]
    fn chain_is_monotone(g in graph(6)) {
        prop_assume!(g.order() >= 2);
        let gamma0 = gamma(&g).0;
        for (u, v) in g.pairs() {
            let chain: Vec<usize> = (0..=6).map(|k| gamma_after_addition(&g, u, v, k).unwrap()).collect();
            prop_assert!(chain.windows(2).all(|w| w[0] <= w[1]));
            prop_assert!(chain[0] + 1 >= gamma0 && chain[0] <= gamma0);
        }
    }
}
