//! Generative property tests for the structural invariants: construction
//! algebra identities, relabeling invariance, serialization round trips,
//! and the order relations between the parameters.

use proptest::prelude::*;

use pathfactor::factor::{decide_factor, extract_path_factor, FactorKind};
use pathfactor::graph::{Edge, Graph, VertexSet};
use pathfactor::graph6::{emit_graph6, parse_graph6};
use pathfactor::rational::ExtRational;
use pathfactor::sun::sun_count_in;
use pathfactor::toughness::{isolated_toughness, toughness};

/// Random graph of order 0..=8 as (order, edge bitmask over the C(8,2)
/// label pairs).
fn graph_strategy() -> impl Strategy<Value = Graph> {
    (0usize..=8, any::<u32>()).prop_map(|(order, bits)| {
        let pairs: Vec<(usize, usize)> = (0..order)
            .flat_map(|u| ((u + 1)..order).map(move |v| (u, v)))
            .collect();
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| bits & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(order, &edges).unwrap()
    })
}

fn permutation_strategy(order: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..order).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn join_edge_count((g1, g2) in (graph_strategy(), graph_strategy())) {
        prop_assume!(g1.order() + g2.order() <= 16);
        let j = g1.join(&g2);
        prop_assert_eq!(
            j.edge_count(),
            g1.edge_count() + g2.edge_count() + g1.order() * g2.order()
        );
    }

    #[test]
    fn removing_nothing_is_identity(g in graph_strategy()) {
        let (h, map) = g.remove_vertices(VertexSet::EMPTY).unwrap();
        prop_assert_eq!(&h, &g);
        prop_assert_eq!(map, (0..g.order()).collect::<Vec<_>>());
    }

    #[test]
    fn remove_then_restore_edge(g in graph_strategy()) {
        for e in g.edges() {
            let restored = g.remove_edge(e).unwrap().add_edge(e).unwrap();
            prop_assert_eq!(&restored, &g);
        }
    }

    #[test]
    fn corona_has_one_leaf_per_base_vertex(g in graph_strategy()) {
        prop_assume!(g.order() >= 1 && g.order() <= 8);
        prop_assume!((0..g.order()).all(|v| g.degree(v) >= 1));
        let c = g.corona().unwrap();
        let leaves = (0..c.order()).filter(|&v| c.degree(v) == 1).count();
        prop_assert_eq!(leaves, g.order());
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy()) {
        let text = emit_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn isolated_at_most_components(g in graph_strategy()) {
        prop_assert!(g.isolated_count() <= g.components().len());
    }

    #[test]
    fn criterion_chain(g in graph_strategy(), mask in any::<u64>()) {
        let alive = g.vertices().mask() & mask;
        let isolated = g.isolated_count_in(alive);
        let suns = sun_count_in(&g, alive);
        let components = g.component_count_in(alive);
        prop_assert!(isolated <= suns);
        prop_assert!(suns <= components);
    }

    #[test]
    fn toughness_at_most_isolated_toughness(g in graph_strategy()) {
        prop_assume!(g.order() >= 1);
        prop_assert!(toughness(&g).unwrap().value <= isolated_toughness(&g).unwrap().value);
    }

    #[test]
    fn infinite_exactly_on_complete(g in graph_strategy()) {
        prop_assume!(g.order() >= 1);
        let t = toughness(&g).unwrap().value;
        prop_assert_eq!(t == ExtRational::Infinity, g.is_complete());
    }

    #[test]
    fn order3_factor_is_order2_factor(g in graph_strategy()) {
        if decide_factor(&g, FactorKind::AtLeast3).is_none() {
            prop_assert!(decide_factor(&g, FactorKind::AtLeast2).is_none());
        }
    }

    #[test]
    fn extracted_factors_validate(g in graph_strategy()) {
        for kind in [FactorKind::AtLeast2, FactorKind::AtLeast3] {
            if let Some(factor) = extract_path_factor(&g, kind) {
                prop_assert!(factor.validate(&g, kind));
            }
        }
    }

    #[test]
    fn decisions_are_relabel_invariant(
        (g, seed) in graph_strategy().prop_flat_map(|g| {
            let order = g.order();
            (Just(g), permutation_strategy(order))
        })
    ) {
        let h = if g.order() == 0 { g.clone() } else { g.relabel(&seed) };
        for kind in [FactorKind::AtLeast2, FactorKind::AtLeast3] {
            prop_assert_eq!(
                decide_factor(&g, kind).is_none(),
                decide_factor(&h, kind).is_none()
            );
        }
        if g.order() >= 1 {
            prop_assert_eq!(toughness(&g).unwrap().value, toughness(&h).unwrap().value);
            prop_assert_eq!(
                isolated_toughness(&g).unwrap().value,
                isolated_toughness(&h).unwrap().value
            );
        }
    }

    #[test]
    fn certificates_validate_against_their_graph(g in graph_strategy()) {
        for kind in [FactorKind::AtLeast2, FactorKind::AtLeast3] {
            if let Some(cert) = decide_factor(&g, kind) {
                prop_assert!(cert.validate(&g));
                prop_assert_eq!(cert.bound, 2 * cert.violating_set.len());
            }
        }
    }

    #[test]
    fn edge_canonicalization(a in 0usize..30, b in 0usize..30) {
        if a == b {
            prop_assert!(Edge::new(a, b).is_err());
        } else {
            let e = Edge::new(a, b).unwrap();
            prop_assert_eq!(e, Edge::new(b, a).unwrap());
            let (u, v) = e.endpoints();
            prop_assert!(u < v);
        }
    }
}
