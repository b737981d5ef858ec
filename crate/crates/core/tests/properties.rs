//! Randomized invariants of the propagation engine, the solvers and the
//! graph6 codec.

use proptest::prelude::*;

use total_forcing::families::{generate, Family};
use total_forcing::forcing::{
    forcing_closure, forcing_closure_with_priority, is_power_dominating,
};
use total_forcing::graph6::{parse_graph6, write_graph6};
use total_forcing::solve::{min_forcing, ForcingVariant, SolverLimits};
use total_forcing::{classify_set, Graph, VertexSet};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    (arb_graph(max_n), any::<u64>()).prop_map(|(g, raw)| {
        let n = g.n();
        let mask = if n == 64 { raw } else { raw & ((1u64 << n) - 1) };
        let s = VertexSet::from_mask(n, mask);
        (g, s)
    })
}

proptest! {
    #[test]
    fn closure_final_set_is_order_independent(
        (g, s) in arb_graph_and_set(9),
        perm_seed in proptest::collection::vec(0usize..1000, 9),
    ) {
        let a = forcing_closure(&g, &s);
        let priority: Vec<usize> = perm_seed.into_iter().take(g.n()).collect();
        let b = forcing_closure_with_priority(&g, &s, &priority);
        prop_assert_eq!(a.final_set, b.final_set);
    }

    #[test]
    fn closure_is_monotone_and_idempotent((g, s) in arb_graph_and_set(9), extra in any::<u64>()) {
        let n = g.n();
        let extra_mask = if n == 64 { extra } else { extra & ((1u64 << n) - 1) };
        let t = s.union(&VertexSet::from_mask(n, extra_mask));
        let cs = forcing_closure(&g, &s).final_set;
        let ct = forcing_closure(&g, &t).final_set;
        prop_assert!(cs.is_subset_of(&ct));
        // closing a closed set changes nothing
        let again = forcing_closure(&g, &cs);
        prop_assert_eq!(again.final_set, cs);
        prop_assert!(again.steps.is_empty());
    }

    #[test]
    fn chronology_replays_to_its_final_set((g, s) in arb_graph_and_set(9)) {
        let c = forcing_closure(&g, &s);
        prop_assert_eq!(c.replay(&g), Some(c.final_set));
    }

    #[test]
    fn power_domination_matches_closed_neighborhood_forcing((g, s) in arb_graph_and_set(8)) {
        // the monitoring recursion reaches V exactly when N[S] is a forcing
        // set (vacuously for empty N[S] on nonempty graphs both are false)
        let w = g.closed_neighborhood(&s);
        let lhs = is_power_dominating(&g, &s);
        let rhs = !w.is_empty() && forcing_closure(&g, &w).is_complete()
            || w.len() == g.n();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn graph6_round_trips(g in arb_graph(40)) {
        let enc = write_graph6(&g);
        prop_assert_eq!(parse_graph6(&enc).unwrap(), g);
    }

    #[test]
    fn perfect_packing_implies_packing((g, s) in arb_graph_and_set(9)) {
        if g.is_perfect_packing(&s) {
            prop_assert!(g.is_packing(&s));
            prop_assert_eq!(g.closed_neighborhood(&s).len(), g.n());
        }
    }

    #[test]
    fn forcing_variant_chain(g in arb_graph(6)) {
        // F <= F_t <= F_c whenever the stricter variants are feasible
        let lim = SolverLimits::default();
        let f = min_forcing(&g, ForcingVariant::Plain, &lim).unwrap();
        prop_assert!(classify_set(&g, &f.witness).forcing || g.n() == 0);
        if let Ok(ft) = min_forcing(&g, ForcingVariant::Total, &lim) {
            prop_assert!(f.value <= ft.value);
            prop_assert!(classify_set(&g, &ft.witness).total_forcing);
            if let Ok(fc) = min_forcing(&g, ForcingVariant::Connected, &lim) {
                // F_t <= F_c holds only with the stated proviso F_c >= 2
                prop_assert!(ft.value <= fc.value || fc.value < 2);
                prop_assert!(classify_set(&g, &fc.witness).connected_forcing);
            }
        }
    }
}

#[test]
fn family_round_trip_graph6() {
    for fam in [Family::Path(70), Family::Cycle(63), Family::Spider(10)] {
        let g = generate(&fam).unwrap();
        assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }
}
