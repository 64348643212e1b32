mod common;

use proptest::prelude::*;
use satgraph_core::oracle::sat_exact;
use satgraph_core::weight::{edge_weight, graph_weight, lower_bound, weight_report};
use satgraph_core::{Graph, Rational, SatLowerBound, SatValue, Weight};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn orientation_identity(g in common::graph(2, 9)) {
        for (u, v) in g.edges() {
            let common = g.common_neighbor_count(u, v) as u32;
            let expected = common + g.deg(u).max(g.deg(v)) as u32;
            prop_assert_eq!(edge_weight(&g, u, v).unwrap(), expected);
            prop_assert_eq!(edge_weight(&g, v, u).unwrap(), expected);
        }
        let report = weight_report(&g);
        let min = report.edge_weights.iter().map(|&(_, w)| w).min();
        prop_assert_eq!(report.graph_weight, min.map_or(Weight::Infinite, Weight::Finite));
        prop_assert_eq!(report.graph_weight, graph_weight(&g));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dominating_vertex_adds_two(g in common::graph(2, 8)) {
        prop_assume!(!g.has_isolated_vertex());
        let Weight::Finite(w) = graph_weight(&g) else { unreachable!("isolate-free graphs have edges") };
        prop_assert_eq!(graph_weight(&g.add_dominating()), Weight::Finite(w + 2));
    }

    #[test]
    fn bound_is_exact_in_halves(w in 1u32..40, n in 0usize..200) {
        let SatLowerBound::Linear(b) = lower_bound(&weighted_star(w)) else { unreachable!() };
        let value = b.value_at(n);
        prop_assert_eq!(*(value * Rational::from_integer(2)).denom(), 1);
        let ceil = value.ceil().to_integer().max(0) as u64;
        prop_assert_eq!(b.integer_value_at(n), ceil);
    }
}

/// `K_{1,w}` has weight exactly `w`.
fn weighted_star(w: u32) -> Graph {
    let g = Graph::star(w as usize);
    assert_eq!(graph_weight(&g), Weight::Finite(w));
    g
}

#[test]
fn lower_bound_coefficients() {
    for (w, slope, constant) in [(1, (0, 1), (0, 1)), (2, (1, 2), (1, 2)), (4, (3, 2), (5, 2)), (5, (2, 1), (5, 1))] {
        let SatLowerBound::Linear(b) = lower_bound(&weighted_star(w)) else { unreachable!() };
        assert_eq!(b.slope, Rational::new(slope.0, slope.1), "wt = {w}");
        assert_eq!(b.constant, Rational::new(constant.0, constant.1), "wt = {w}");
    }
    assert_eq!(lower_bound(&Graph::empty(4)), SatLowerBound::Infinite);
}

fn fixtures() -> Vec<(&'static str, Graph)> {
    let k2 = Graph::complete(2);
    vec![
        ("K3", Graph::complete(3)),
        ("K4", Graph::complete(4)),
        ("K_{1,3}", Graph::star(3)),
        ("K4+pendant", common::clique_with_pendant(4)),
        ("K2+K2", k2.disjoint_union(&k2)),
        ("K2+K3", k2.disjoint_union(&Graph::complete(3))),
        ("P3", Graph::path(3)),
        ("P4", Graph::path(4)),
        ("C4", Graph::cycle(4)),
    ]
}

#[test]
fn lower_bound_never_exceeds_the_saturation_number() {
    for (name, h) in fixtures() {
        let SatLowerBound::Linear(b) = lower_bound(&h) else { panic!("{name} has an edge") };
        for n in h.order()..=7 {
            let SatValue::Finite(sat) = sat_exact(&h, n).unwrap().value else { panic!("{name} has an edge") };
            assert!(
                b.integer_value_at(n) as usize <= sat,
                "{name}, n = {n}: bound {} > sat {sat}",
                b.integer_value_at(n)
            );
        }
    }
}
