mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use satgraph_core::canon::{canonical_graph, graph_from_form};
use satgraph_core::oracle::enumerate_graphs;
use satgraph_core::{canonical_form, contains_subgraph, verify_saturation, Graph};

fn check_invariants(g: &Graph) {
    let n = g.order();
    let mut m = 0;
    for u in 0..n {
        assert!(!g.has_edge(u, u));
        for v in 0..n {
            assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
        }
        assert_eq!(g.deg(u), g.neighbor_iter(u).count());
        m += g.deg(u);
    }
    assert_eq!(m, 2 * g.size());
    assert_eq!(g.edges().count(), g.size());
    assert_eq!(g.non_edges().count() + g.size(), n * n.saturating_sub(1) / 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn subgraph_search_matches_brute_force(g in common::graph(1, 7), h in common::graph(1, 5)) {
        let found = contains_subgraph(&g, &h, None);
        prop_assert_eq!(found.is_some(), common::brute_contains(&g, &h));
        if let Some(e) = found {
            prop_assert!(e.is_embedding(&h, &g));
        }
    }

    #[test]
    fn required_edge_is_used(g in common::graph(2, 7), h in common::graph(2, 4)) {
        for (x, y) in g.edges() {
            if let Some(e) = contains_subgraph(&g, &h, Some((x, y))) {
                prop_assert!(e.is_embedding(&h, &g));
                prop_assert!(e.uses_pair(&h, x, y));
            }
        }
    }

    #[test]
    fn derived_graphs_keep_invariants(a in common::graph(0, 6), b in common::graph(0, 6)) {
        let j = a.join(&b);
        let u = a.disjoint_union(&b);
        for g in [&a, &j, &u, &a.add_isolated(), &a.add_dominating()] {
            check_invariants(g);
        }
        prop_assert_eq!(j.order(), a.order() + b.order());
        prop_assert_eq!(j.size(), a.size() + b.size() + a.order() * b.order());
        prop_assert_eq!(u.size(), a.size() + b.size());
        prop_assert_eq!(a.add_dominating().size(), a.size() + a.order());
        prop_assert!(a.add_dominating().degrees().last() == Some(&a.order()));
        prop_assert!(a.add_isolated().is_isolated(a.order()));
    }

    #[test]
    fn canonical_form_is_a_relabelling_invariant(g in common::graph(1, 8), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.relabel(&perm).unwrap();
        let form = canonical_form(&g).unwrap();
        prop_assert_eq!(&form, &canonical_form(&h).unwrap());
        let c = graph_from_form(&form).unwrap();
        prop_assert_eq!(&c, &canonical_graph(&g).unwrap());
        prop_assert!(common::brute_isomorphic(&c, &g) || n > 7);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn certificates_are_embeddings_through_the_added_edge(g in common::graph(4, 7), h in common::graph(2, 4)) {
        prop_assume!(h.size() > 0);
        let verdict = verify_saturation(&g, &h).unwrap();
        prop_assert_eq!(verdict.is_h_free(), !common::brute_contains(&g, &h));
        if let Some(certs) = verdict.certificates() {
            prop_assert_eq!(certs.len(), g.non_edges().count());
            for c in certs {
                let (x, y) = c.non_edge;
                let plus = g.with_edge(x, y).unwrap();
                prop_assert!(c.embedding.is_embedding(&h, &plus));
                prop_assert!(c.embedding.uses_pair(&h, x, y));
            }
        }
        if let Some((x, y)) = verdict.missing() {
            prop_assert!(!g.has_edge(x, y));
            prop_assert!(!common::brute_contains(&g.with_edge(x, y).unwrap(), &h));
        }
    }
}

/// Number of isomorphism classes on `n` vertices by pairwise brute-force
/// comparison against one representative per class.
fn brute_class_count(n: usize) -> usize {
    let mut reps: Vec<Graph> = Vec::new();
    for g in common::all_graphs(n) {
        if !reps.iter().any(|r| common::brute_isomorphic(r, &g)) {
            reps.push(g);
        }
    }
    reps.len()
}

#[test]
fn class_counts_match_brute_force() {
    for (n, expected) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)] {
        let forms: BTreeSet<_> = common::all_graphs(n).iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(forms.len(), expected, "canonical forms, n = {n}");
        assert_eq!(brute_class_count(n), expected, "brute force, n = {n}");
        let enumerated: usize = (0..=n * (n - 1) / 2).map(|m| enumerate_graphs(n, m).unwrap().len()).sum();
        assert_eq!(enumerated, expected, "level enumeration, n = {n}");
    }
}

#[test]
fn larger_class_counts() {
    // Non-isomorphic graphs on 6 and 7 vertices.
    for (n, expected) in [(6, 156), (7, 1044)] {
        let enumerated: usize = (0..=n * (n - 1) / 2).map(|m| enumerate_graphs(n, m).unwrap().len()).sum();
        assert_eq!(enumerated, expected, "n = {n}");
    }
}
