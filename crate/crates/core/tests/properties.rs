use proptest::prelude::*;

use artin_homology::oracle::{random_coxeter_graph, RandomGraphSpec};
use artin_homology::{
    from_catalog, homology_summary, invariant_profile, omega_sets, CoxeterGraph, Flavor,
};

fn graph_strategy(max_vertices: usize) -> impl Strategy<Value = CoxeterGraph> {
    (any::<u64>(), 1..=max_vertices).prop_map(|(seed, n)| {
        random_coxeter_graph(&RandomGraphSpec::new(seed, n)).expect("valid spec")
    })
}

fn graph_and_order() -> impl Strategy<Value = (CoxeterGraph, Vec<usize>)> {
    graph_strategy(8).prop_flat_map(|g| {
        let order = Just((0..g.vertex_count()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), order)
    })
}

proptest! {
    #[test]
    fn relabeling_preserves_profile((g, order) in graph_and_order()) {
        let a = invariant_profile(&g);
        let b = invariant_profile(&g.permuted(&order));
        prop_assert_eq!(
            (a.p, a.q1, a.q2, a.q3, a.n1, a.n2, a.n3, a.n4),
            (b.p, b.q1, b.q2, b.q3, b.n1, b.n2, b.n3, b.n4)
        );
    }

    #[test]
    fn howlett_identity(g in graph_strategy(10)) {
        let prof = invariant_profile(&g);
        prop_assert!(prof.howlett_identity_holds());
    }

    #[test]
    fn generator_counts_match_rank(g in graph_strategy(7)) {
        let rank = invariant_profile(&g).mod2_rank();
        for flavor in [Flavor::Artin, Flavor::Coxeter] {
            prop_assert_eq!(omega_sets(&g, flavor).total(), rank);
        }
    }

    #[test]
    fn odd_subgraph_keeps_only_odd_labels(g in graph_strategy(8)) {
        let odd = g.odd_subgraph();
        prop_assert_eq!(odd.vertex_count(), g.vertex_count());
        for e in odd.edges() {
            prop_assert!(g.label(e.lo(), e.hi()).is_odd());
        }
        let expected = g.edges().filter(|(_, l)| l.is_odd()).count();
        prop_assert_eq!(odd.edge_count(), expected);
    }

    #[test]
    fn full_subgraph_restricts_labels(g in graph_strategy(8), mask in any::<u16>()) {
        let keep: Vec<String> = g
            .vertices()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, v)| v.clone())
            .collect();
        let h = g.full_subgraph(keep.iter().map(String::as_str)).unwrap();
        for a in &keep {
            for b in &keep {
                prop_assert_eq!(h.label_of(a, b).unwrap(), g.label_of(a, b).unwrap());
            }
        }
    }

    #[test]
    fn integral_answer_only_when_corollary_applies(g in graph_strategy(8)) {
        let s = homology_summary(&g);
        prop_assert_eq!(s.h2_artin_integral.is_some(), s.corollary.applies);
        prop_assert_eq!(s.h2_coxeter.torsion2_rank, s.profile.mod2_rank());
    }
}

#[test]
fn extending_a1_gives_type_a() {
    let mut g = from_catalog("A1").unwrap();
    for n in 2..=10 {
        g = g.extend_family().unwrap();
        let a = from_catalog(&format!("A{n}")).unwrap();
        assert_eq!(g.label_table(), a.label_table(), "A{n}");
    }
}

#[test]
fn type_a_rank_is_one_from_three_vertices() {
    assert_eq!(
        invariant_profile(&from_catalog("A2").unwrap()).mod2_rank(),
        0
    );
    for n in 3..=12 {
        assert_eq!(
            invariant_profile(&from_catalog(&format!("A{n}")).unwrap()).mod2_rank(),
            1
        );
    }
}
