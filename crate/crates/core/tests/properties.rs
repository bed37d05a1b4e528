use bettisize::theorems::check_global_bounds;
use bettisize::{initial_ideal, pd_reg, Field, Graph, SquarefreeMonomial, VertexSet};
use proptest::prelude::*;

fn graph_strategy(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
            let edges: Vec<(usize, usize)> = pairs
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn with_perm(min: usize, max: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph_strategy(min, max).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn invariants_are_isomorphism_invariant((g, perm) in with_perm(2, 6)) {
        prop_assume!(g.edge_count() > 0);
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(pd_reg(&g, Field::Rationals).unwrap(), pd_reg(&h, Field::Rationals).unwrap());
        prop_assert_eq!(g.canonical_form(), h.canonical_form());
    }

    #[test]
    fn induced_subgraphs_are_smaller(g in graph_strategy(2, 6), bits in any::<u32>()) {
        let w = VertexSet::from_bits(bits).intersection(g.vertices());
        prop_assume!(!w.is_empty());
        let sub = g.induced_subgraph(w).unwrap();
        prop_assume!(sub.edge_count() > 0);
        let whole = pd_reg(&g, Field::Rationals).unwrap();
        let part = pd_reg(&sub, Field::Rationals).unwrap();
        prop_assert!(part.le(whole), "{} vs {}", part, whole);
    }

    #[test]
    fn global_bounds_hold(g in graph_strategy(2, 7)) {
        prop_assume!(g.edge_count() > 0);
        let report = check_global_bounds(&g, Field::Rationals).unwrap();
        prop_assert!(report.passed, "{:?}", report.counterexample);
    }

    #[test]
    fn quadrics_of_initial_ideal_are_edge_leading_terms(g in graph_strategy(2, 8)) {
        let n = g.vertex_count();
        let ideal = initial_ideal(&g);
        let mut quadrics: Vec<u64> = ideal.of_degree(2).map(SquarefreeMonomial::mask).collect();
        quadrics.sort_unstable();
        let mut expected: Vec<u64> = g
            .edges()
            .into_iter()
            .map(|(i, j)| SquarefreeMonomial::x(i, n).times(SquarefreeMonomial::y(j, n)).mask())
            .collect();
        expected.sort_unstable();
        prop_assert_eq!(quadrics, expected);
        prop_assert!(ideal.generators().all(|m| m.degree() >= 2));
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(1, 20)) {
        prop_assert_eq!(Graph::from_graph6(&g.to_graph6()).unwrap(), g);
    }

    #[test]
    fn disjoint_union_formulas(a in graph_strategy(2, 4), b in graph_strategy(2, 4)) {
        prop_assume!(a.edge_count() > 0 && b.edge_count() > 0);
        let (pa, pb) = (pd_reg(&a, Field::Rationals).unwrap(), pd_reg(&b, Field::Rationals).unwrap());
        let both = pd_reg(&Graph::disjoint_union(&[a, b]).unwrap(), Field::Rationals).unwrap();
        prop_assert_eq!((both.p, both.r), (pa.p + pb.p + 1, pa.r + pb.r - 1));
    }
}
