mod common;

use common::{brute_reaches, graph_from, paths_up_to, random_graphs};
use lpa_core::{fixtures, Cycle, Graph, GraphError, VertexSet};
use proptest::prelude::*;

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=5)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec((0..n, 0..n), 0..=7)))
        .prop_map(|(n, edges)| graph_from(n, &edges))
}

proptest! {
    #[test]
    fn descendants_reflexive_and_transitive(g in arb_graph()) {
        for v in g.vertices() {
            let dv = g.descendants(v).unwrap();
            prop_assert!(dv.contains(v));
            for w in dv.iter() {
                prop_assert!(g.descendants(w).unwrap().is_subset(&dv));
            }
        }
    }

    #[test]
    fn descendants_match_path_search(g in arb_graph()) {
        for v in g.vertices() {
            let dv = g.descendants(v).unwrap();
            for w in g.vertices() {
                prop_assert_eq!(dv.contains(w), brute_reaches(&g, v, &VertexSet::singleton(w)));
            }
        }
    }

    #[test]
    fn cycles_are_simple_canonical_and_stable(g in arb_graph()) {
        let cycles = g.simple_cycles().unwrap();
        prop_assert_eq!(&cycles, &g.simple_cycles().unwrap());
        for c in &cycles {
            let sources: Vec<_> = c.path().edge_sources(&g).collect();
            let distinct: VertexSet = sources.iter().copied().collect();
            prop_assert_eq!(distinct.len(), sources.len());
            prop_assert!(c.path().is_closed());
            prop_assert_eq!(Some(c.start()), distinct.first());
        }
        let mut sorted = cycles.clone();
        sorted.sort_by(|a, b| (a.len(), a.edges()).cmp(&(b.len(), b.edges())));
        prop_assert_eq!(sorted, cycles);
    }

    #[test]
    fn exits_leave_the_cycle(g in arb_graph()) {
        for c in g.simple_cycles().unwrap() {
            let exits = g.cycle_exits(&c).unwrap();
            let vs = c.vertex_set();
            for e in &exits {
                prop_assert!(!c.edges().contains(e));
                prop_assert!(vs.contains(g.source(*e)));
            }
            let expected = g.edges().filter(|e| vs.contains(g.source(*e)) && !c.edges().contains(e)).count();
            prop_assert_eq!(exits.len(), expected);
            prop_assert_eq!(g.is_ne_cycle(&c).unwrap(), exits.is_empty());
        }
    }

    #[test]
    fn specialization_domain_is_non_sinks(g in arb_graph()) {
        let spec = g.canonical_specialization();
        for v in g.vertices() {
            match spec.get(v) {
                Some(e) => {
                    prop_assert_eq!(g.source(e), v);
                    prop_assert_eq!(Some(&e), g.out_edges(v).iter().min());
                }
                None => prop_assert!(g.is_sink(v)),
            }
        }
    }
}

/// Closed paths with distinct sources, up to rotation, found by enumeration.
#[test]
fn simple_cycles_match_closed_path_search() {
    for g in random_graphs(11, 200, 4, 6) {
        let mut expected: Vec<Cycle> = paths_up_to(&g, g.vertex_count())
            .into_iter()
            .filter(|p| !p.is_vertex() && p.is_closed())
            .filter_map(|p| Cycle::new(&g, p.edges()).ok())
            .collect();
        expected.sort_by(|a, b| (a.len(), a.edges()).cmp(&(b.len(), b.edges())));
        expected.dedup();
        assert_eq!(g.simple_cycles().unwrap(), expected);
    }
}

#[test]
fn fixture_examples() {
    let g3 = fixtures::g3_example();
    let v1 = g3.vertex_id("v1").unwrap();
    assert_eq!(g3.descendants(v1).unwrap(), VertexSet::full(&g3));
    let cycles = g3.simple_cycles().unwrap();
    assert_eq!(cycles.len(), 1);
    assert_eq!(cycles[0].display(&g3).to_string(), "[b2 b3 b4]");
    assert!(g3.is_ne_cycle(&cycles[0]).unwrap());

    let g2 = fixtures::g2_loop_exit();
    let c = &g2.simple_cycles().unwrap()[0];
    assert_eq!(g2.cycle_exits(c).unwrap(), vec![g2.edge_id("f").unwrap()]);
    assert!(fixtures::g5_edge().simple_cycles().unwrap().is_empty());
}

#[test]
fn cycle_cap_is_reported() {
    // Four loops at one vertex: four simple cycles.
    let g = graph_from(1, &[(0, 0), (0, 0), (0, 0), (0, 0)]);
    assert_eq!(g.simple_cycles_capped(4).unwrap().len(), 4);
    assert!(matches!(g.simple_cycles_capped(3), Err(GraphError::CycleCapExceeded(3))));
}
