use std::collections::BTreeSet;

use proptest::prelude::*;
use sparing::*;

fn random_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0f64..=1.0, any::<u64>())
        .prop_map(|(n, p, seed)| Family::Random { n, p, seed }.generate().unwrap())
}

fn vertex_subset(g: &Graph, bits: u64) -> BTreeSet<VertexId> {
    g.vertices()
        .filter(|&v| bits >> (v % 64) & 1 == 1)
        .collect()
}

/// Greedily extends to a maximal independent set, scanning in `order`.
fn maximal_from(g: &Graph, order: &[VertexId]) -> BTreeSet<VertexId> {
    let mut set = BTreeSet::new();
    for &v in order {
        if g.neighbors(v).iter().all(|w| !set.contains(w)) {
            set.insert(v);
        }
    }
    set
}

fn label(xs: &[u64]) -> SetLabel {
    SetLabel::new(xs.iter().copied()).unwrap()
}

fn small_set() -> impl Strategy<Value = SetLabel> {
    prop::collection::btree_set(0u64..50, 1..6).prop_map(|s| SetLabel::new(s).unwrap())
}

proptest! {
    #[test]
    fn degree_sums(g in random_graph(30)) {
        let mut total = 0;
        for v in g.vertices() {
            let d = g.degree(v).unwrap();
            prop_assert_eq!(d, g.open_neighborhood(v).unwrap().len());
            prop_assert!(!g.open_neighborhood(v).unwrap().contains(&v));
            total += d;
        }
        prop_assert_eq!(total, 2 * g.m());
    }

    #[test]
    fn edges_within_is_monotone(g in random_graph(20), a in any::<u64>(), b in any::<u64>()) {
        let all: BTreeSet<_> = g.vertices().collect();
        prop_assert_eq!(g.edges_within(&all), g.edges().iter().copied().collect::<EdgeSet>());
        let s = vertex_subset(&g, a & b);
        let t = vertex_subset(&g, a);
        prop_assert!(g.edges_within(&s).is_subset(&g.edges_within(&t)));
        prop_assert_eq!(g.is_independent(&t), g.edges_within(&t).is_empty());
    }

    #[test]
    fn edge_list_round_trip(g in random_graph(25)) {
        let text = serialize_edge_list(&g);
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn greedy_chooses_an_independent_set(g in random_graph(30)) {
        let r = run_greedy(&g);
        prop_assert!(g.is_independent(&r.independent_set));
        prop_assert_eq!(r.phi, g.edges_avoiding(&r.independent_set).len());
        let literal = r.phi_literal.unwrap();
        prop_assert!(literal <= r.phi);
        prop_assert_eq!(literal + r.discrepancy.len(), r.phi);
        prop_assert_eq!(r.has_discrepancy(), literal != r.phi);
        let acc = r.literal_accumulation();
        let last = acc.last().cloned().unwrap_or_default();
        prop_assert!(last.is_subset(&r.mono_edges));
        prop_assert_eq!(last.len(), literal);
    }
}

proptest! {
    #[test]
    fn greedy_state_invariants(g in random_graph(25)) {
        let mut state = GreedyState::new(&g);
        while let Some(v) = state.select_next(&g) {
            // unlabeled candidates never neighbor a chosen vertex
            prop_assert!(g.neighbors(v).iter().all(|w| !state.chosen().contains(w)));
            let reduced = state.reduced_degree(&g, v);
            let rec = state.step(&g, v).unwrap().clone();
            prop_assert_eq!(rec.degree_at_pick, reduced);

            let chosen: BTreeSet<_> = state.chosen().iter().copied().collect();
            prop_assert!(g.is_independent(&chosen));
            prop_assert!(chosen.is_disjoint(state.singleton_labeled()));
            let covered: BTreeSet<_> = chosen
                .iter()
                .flat_map(|&c| g.neighbors(c).iter().copied())
                .collect();
            prop_assert_eq!(&covered, state.singleton_labeled());
            prop_assert!(state
                .mono_edges_literal()
                .is_subset(&g.edges_within(state.singleton_labeled())));
        }
        prop_assert_eq!(state.unlabeled().count(), 0);
    }

    #[test]
    fn greedy_is_deterministic(g in random_graph(25)) {
        let a = run_greedy(&g);
        let b = run_greedy(&g.clone());
        prop_assert_eq!(format!("{a:?}"), format!("{b:?}"));
        let picks: Vec<_> = a.trace.iter().map(|r| r.picked).collect();
        prop_assert_eq!(replay_trace(&g, &picks).unwrap(), a);
    }

    #[test]
    fn greedy_bounds_exact(g in random_graph(12)) {
        let exact = sparing_exact(&g, &ExactConfig::default()).unwrap();
        prop_assert!(run_greedy(&g).phi >= exact.phi);
    }

    #[test]
    fn exact_methods_agree(g in random_graph(8)) {
        let exact = sparing_exact(&g, &ExactConfig::default()).unwrap();
        let brute = sparing_exact(&g, &ExactConfig::brute()).unwrap();
        prop_assert_eq!(exact.phi, brute.phi);
        prop_assert_eq!(&exact.independent_set, &brute.independent_set);
        prop_assert_eq!(sparing_brute_labelings(&g, g.n()).unwrap(), exact.phi);
        // the returned set is maximal independent
        prop_assert!(g.is_independent(&exact.independent_set));
        for v in g.vertices().filter(|v| !exact.independent_set.contains(v)) {
            prop_assert!(g.neighbors(v).iter().any(|w| exact.independent_set.contains(w)));
        }
    }

    #[test]
    fn adding_a_vertex_never_hurts(g in random_graph(14), bits in any::<u64>()) {
        let mut i = BTreeSet::new();
        for v in vertex_subset(&g, bits) {
            if g.neighbors(v).iter().all(|w| !i.contains(w)) {
                i.insert(v);
            }
        }
        let before = g.edges_avoiding(&i).len();
        for v in g.vertices() {
            if !i.contains(&v) && g.neighbors(v).iter().all(|w| !i.contains(w)) {
                let mut j = i.clone();
                j.insert(v);
                prop_assert!(g.edges_avoiding(&j).len() <= before);
            }
        }
        prop_assert_eq!(max_incidence(&g, &i).unwrap(), g.m() - before);
    }

    #[test]
    fn zero_iff_bipartite(g in random_graph(14)) {
        let phi = sparing_exact(&g, &ExactConfig::default()).unwrap().phi;
        prop_assert_eq!(phi == 0, g.is_bipartite());
    }

    #[test]
    fn built_labeling_realizes_mono_edges(g in random_graph(20), order_seed in any::<u64>()) {
        let mut order: Vec<_> = g.vertices().collect();
        // deterministic shuffle without pulling rand into the tests
        order.sort_by_key(|&v| (v as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ order_seed);
        let i = maximal_from(&g, &order);
        let lab = build_labeling(&g, &i).unwrap();
        let report = verify_wiasl(&g, &lab);
        prop_assert!(report.is_valid(), "{:?}", report);
        let outside: BTreeSet<_> = g.vertices().filter(|v| !i.contains(v)).collect();
        prop_assert_eq!(mono_indexed_count(&g, &lab), g.edges_within(&outside).len());
        prop_assert_eq!(report.mono_indexed_edge_count, g.edges_within(&outside).len());
        for e in g.edges() {
            let both = lab.vertex_labels[e.u()].is_singleton() && lab.vertex_labels[e.v()].is_singleton();
            prop_assert_eq!(lab.edge_labels[e].is_singleton(), both);
        }
    }

    #[test]
    fn sumset_laws(a in small_set(), b in small_set(), c in small_set(), x in 0u64..50) {
        let ab = sumset(&a, &b);
        prop_assert_eq!(&ab, &sumset(&b, &a));
        prop_assert_eq!(sumset(&ab, &c), sumset(&a, &sumset(&b, &c)));
        prop_assert_eq!(sumset(&a, &SetLabel::singleton(x)).len(), a.len());
        prop_assert!(ab.len() >= a.len().max(b.len()));
        prop_assert!(ab.len() <= a.len() * b.len());
        prop_assert_eq!(sumset(&label(&[0]), &a), a);
    }
}
