use bettisize::families::{
    family_clique_fan, family_d5, family_join_2k1, family_reg3, family_reg_n_minus_2, is_d5_type,
    is_gt_member, join_2k1_apices, pdreg_closed_form, realize, D5Reason,
};
use bettisize::{enumerate_graphs, pd_reg, Field, Graph, PdRegPair, VertexSet};

const Q: Field = Field::Rationals;

/// `G ∈ 𝒢_T` by trying every non-adjacent ordered pair and every 3-colouring of `T`.
fn gt_brute(g: &Graph) -> bool {
    let n = g.vertex_count();
    for u in 1..=n {
        for v in 1..=n {
            if u == v || g.has_edge(u, v) {
                continue;
            }
            let t: Vec<usize> = (1..=n).filter(|&w| w != u && w != v).collect();
            for code in 0..3usize.pow(t.len() as u32) {
                let mut parts = [VertexSet::default(); 3];
                let mut c = code;
                for &w in &t {
                    parts[c % 3] = parts[c % 3].with(w);
                    c /= 3;
                }
                let [v0, v1, v2] = parts;
                let ok = !v1.is_empty()
                    && !v2.is_empty()
                    && g.neighbors(u) == v0.union(v1)
                    && g.neighbors(v) == v0.union(v2)
                    && v1.iter().all(|a| v2.iter().all(|b| g.has_edge(a, b)));
                if ok {
                    return true;
                }
            }
        }
    }
    false
}

/// `G = H * F` for some `H`, found by testing every `|F|`-subset as the `F` side.
fn is_join_with(g: &Graph, factor: &Graph) -> bool {
    let n = g.vertex_count();
    let k = factor.vertex_count();
    (0u32..1 << n)
        .map(VertexSet::from_bits)
        .filter(|x| x.len() == k && k < n)
        .any(|x| {
            let rest = g.vertices().difference(x);
            x.iter().all(|a| rest.iter().all(|b| g.has_edge(a, b)))
                && g.induced_subgraph(x).unwrap().is_isomorphic(factor)
        })
}

fn k1_k2() -> Graph {
    Graph::from_edges(3, &[(2, 3)]).unwrap()
}

#[test]
fn gt_and_d5_agree_with_definitions() {
    let two = Graph::isolated(2).unwrap();
    let three = Graph::isolated(3).unwrap();
    let mut seen = [0usize; 4];
    for n in 3..=6 {
        for g in enumerate_graphs(n, true, false).unwrap() {
            let gt = gt_brute(&g);
            assert_eq!(is_gt_member(&g).is_some(), gt, "{}", g.to_graph6());
            let excluded = is_join_with(&g, &two);
            assert_eq!(join_2k1_apices(&g).is_some(), excluded, "{}", g.to_graph6());
            let a = is_join_with(&g, &three);
            let b = is_join_with(&g, &k1_k2());
            let expected = !excluded && (a || b || gt);
            let reason = is_d5_type(&g);
            assert_eq!(reason != D5Reason::NotD5, expected, "{}", g.to_graph6());
            match reason {
                D5Reason::Join3K1 => assert!(a),
                D5Reason::JoinK1K2 => assert!(b && !a),
                D5Reason::Gt => assert!(gt && !a && !b),
                D5Reason::NotD5 => {}
            }
            seen[reason as usize] += 1;
        }
    }
    assert!(seen.iter().all(|&c| c > 0), "{seen:?}");
}

#[test]
fn gt_witness_is_consistent() {
    for g in enumerate_graphs(6, true, false).unwrap() {
        if let Some(w) = is_gt_member(&g) {
            assert!(!g.has_edge(w.u, w.v));
            assert_eq!(w.t, g.vertices().without(w.u).without(w.v));
            assert_eq!(w.t.len(), 4);
            assert_eq!(g.neighbors(w.u), w.v0.union(w.v1));
            assert_eq!(g.neighbors(w.v), w.v0.union(w.v2));
            assert!(w.v0.intersection(w.v1).is_empty() && w.v1.intersection(w.v2).is_empty());
        }
    }
}

#[test]
fn join_2k1_family_has_top_pd() {
    for n in 5..=7 {
        for r in 3..=n - 2 {
            let g = family_join_2k1(n, r).unwrap();
            assert!(join_2k1_apices(&g).is_some());
            assert_eq!(
                pd_reg(&g, Q).unwrap(),
                PdRegPair::new(2 * n as u32 - 5, r as u32)
            );
        }
    }
    let g = family_join_2k1(7, 5).unwrap();
    assert!(g.is_isomorphic(
        &Graph::join(&Graph::path(5).unwrap(), &Graph::isolated(2).unwrap()).unwrap()
    ));
}

#[test]
fn other_families_hit_their_pairs() {
    for n in 5..=7 {
        for r in 3..=n - 2 {
            if let Ok(g) = family_d5(n, r) {
                assert_eq!(
                    pd_reg(&g, Q).unwrap(),
                    PdRegPair::new(2 * n as u32 - 6, r as u32),
                    "d5 {n} {r}"
                );
                assert_ne!(is_d5_type(&g), D5Reason::NotD5);
                assert!(g.is_connected());
            }
        }
    }
    for n in 4..=7 {
        for p in n - 3..=2 * n - 5 {
            assert_eq!(
                pd_reg(&family_reg3(n, p).unwrap(), Q).unwrap(),
                PdRegPair::new(p as u32, 3)
            );
        }
    }
    for n in 6..=7 {
        for p in n - 4..=2 * n - 5 {
            let g = family_reg_n_minus_2(n, p).unwrap();
            assert_eq!(
                pd_reg(&g, Q).unwrap(),
                PdRegPair::new(p as u32, n as u32 - 2),
                "{n} {p}"
            );
        }
    }
    for n in 2..=7 {
        for m in 1..n {
            let g = family_clique_fan(n, m).unwrap();
            let got = pd_reg(&g, Q).unwrap();
            assert!(
                got.p as usize + m + 3 <= 2 * n && got.r <= 3,
                "fan {n} {m}: {got}"
            );
            if m == n - 1 {
                assert_eq!(got.p as usize, n - 2);
            }
        }
    }
}

#[test]
fn realize_is_total_up_to_six() {
    for n in 3..=6 {
        for pair in pdreg_closed_form(n).unwrap() {
            let cert = realize(n, pair.p, pair.r, false, Q).unwrap();
            assert_eq!(pd_reg(&cert.graph, Q).unwrap(), pair);
            assert_eq!(cert.graph.vertex_count(), n);
            assert!(!cert.graph.has_isolated_vertices());
            assert!(!cert.construction_trace.is_empty());
        }
    }
}
