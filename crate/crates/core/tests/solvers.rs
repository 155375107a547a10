mod common;

use proptest::prelude::*;

use twotrans::bounds::{certify, closed_form};
use twotrans::chain::{biclique_formula, max_biclique_params, tr2_chain};
use twotrans::classes::{chain_ordering, split_decomposition, RootedTree};
use twotrans::generate::{self, generate_cmbt, generate_near_complete_bipartite};
use twotrans::oracle::{
    brute_tr, brute_tr2, canonicalize_partition, fold_transitive, DEFAULT_BUDGET,
};
use twotrans::solve::{solve, Method};
use twotrans::split::tr2_split;
use twotrans::tree::{extract_tree_witness, solve_tree, two_transitive_number};
use twotrans::{verify_2transitive, Graph};

fn tr2(g: &Graph) -> usize {
    brute_tr2(g, DEFAULT_BUDGET).unwrap().0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn tree_witness_at_every_vertex(seed in any::<u64>(), n in 1usize..40) {
        let g = generate::random_tree(seed, n).unwrap();
        let t = RootedTree::new(g.clone(), 0).unwrap();
        let state = solve_tree(&t);
        for v in 0..n {
            let p = extract_tree_witness(&t, &state, v).unwrap();
            prop_assert_eq!(p.k(), state.t2[v]);
            prop_assert!(verify_2transitive(&g, &p).unwrap());
            if p.k() >= 2 {
                prop_assert_eq!(p.part(p.k()), &[v][..]);
            }
        }
    }

    #[test]
    fn rerooting_agrees(seed in any::<u64>(), n in 1usize..30, r in any::<prop::sample::Index>()) {
        let g = generate::random_tree(seed, n).unwrap();
        let a = solve_tree(&RootedTree::new(g.clone(), 0).unwrap());
        let b = solve_tree(&RootedTree::new(g, r.index(n)).unwrap());
        prop_assert_eq!(a.t2, b.t2);
    }

    #[test]
    fn split_matches_oracle(seed in any::<u64>(), n in 1usize..=9) {
        let g = generate::random_split(seed, n).unwrap();
        let d = split_decomposition(&g).unwrap();
        let (k, p) = tr2_split(&g, &d).unwrap();
        prop_assert_eq!(k, tr2(&g));
        prop_assert!(verify_2transitive(&g, &p).unwrap());
        prop_assert!(certify(&g, k, &p).pass);
    }

    #[test]
    fn chain_matches_oracle(seed in any::<u64>(), n in 2usize..=11) {
        let g = generate::random_chain(seed, n).unwrap();
        let ord = chain_ordering(&g).unwrap();
        let (k, p) = tr2_chain(&g, &ord).unwrap();
        prop_assert_eq!(k, tr2(&g));
        prop_assert!(verify_2transitive(&g, &p).unwrap());
        prop_assert!(certify(&g, k, &p).pass);
    }

    #[test]
    fn auto_matches_brute(seed in any::<u64>(), n in 1usize..=8, p in 0.0f64..0.7) {
        let g = generate::random_connected(seed, n, p).unwrap();
        let a = solve(&g, Method::Auto, DEFAULT_BUDGET).unwrap();
        let b = solve(&g, Method::Brute, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(a.tr2, b.tr2);
        prop_assert!(verify_2transitive(&g, &a.witness).unwrap());
        if a.tr2 >= 3 {
            let c = canonicalize_partition(&g, &a.witness).unwrap();
            prop_assert_eq!(c.part(c.k()).len(), 1);
            prop_assert_eq!(c.part(c.k() - 1).len(), 2);
        }
    }

    #[test]
    fn folding_halves_transitive_partitions(seed in any::<u64>(), n in 1usize..=8, p in 0.0f64..0.8) {
        let g = generate::random_connected(seed, n, p).unwrap();
        let (tr, part) = brute_tr(&g, DEFAULT_BUDGET).unwrap();
        let folded = fold_transitive(&g, &part).unwrap();
        prop_assert_eq!(folded.k(), tr.div_ceil(2));
        prop_assert!(verify_2transitive(&g, &folded).unwrap());
    }

    #[test]
    fn two_transitive_number_is_monotone(mut values in prop::collection::vec(1usize..8, 0..12), extra in 1usize..8) {
        values.sort_unstable();
        let base = two_transitive_number(&values).unwrap();
        values.push(extra);
        values.sort_unstable();
        let more = two_transitive_number(&values).unwrap();
        prop_assert!(more == base || more == base + 1);
    }
}

#[test]
fn cmbt_values() {
    for k in 1..=6 {
        let t = generate_cmbt(k).unwrap();
        let state = solve_tree(&t);
        assert_eq!(state.tr2(), k);
        assert_eq!(state.t2[t.root()], k);
    }
}

#[test]
fn every_small_tree_matches_oracle() {
    for n in 1..=9 {
        for g in common::trees(n) {
            let state = solve_tree(&RootedTree::new(g.clone(), 0).unwrap());
            assert_eq!(state.tr2(), tr2(&g), "{:?}", g.edge_vec());
        }
    }
}

#[test]
fn chain_examples() {
    let g = generate_near_complete_bipartite(4).unwrap().graph;
    let ord = chain_ordering(&g).unwrap();
    assert_eq!(tr2_chain(&g, &ord).unwrap().0, 3);
    let params = max_biclique_params(&g, &ord).unwrap();
    assert_eq!(biclique_formula(&params), 2);
    for t in 2..=9 {
        let g = generate_near_complete_bipartite(t).unwrap().graph;
        let ord = chain_ordering(&g).unwrap();
        assert_eq!(tr2_chain(&g, &ord).unwrap().0, t / 2 + 1, "t={t}");
    }
}

#[test]
fn closed_forms_match_oracle() {
    let mut graphs = Vec::new();
    for n in 1..=9 {
        graphs.push(generate::path(n).unwrap());
        graphs.push(generate::complete(n).unwrap());
        if n >= 3 {
            graphs.push(generate::cycle(n).unwrap());
        }
    }
    for a in 1..=5 {
        for b in 1..=9 - a {
            graphs.push(generate::complete_bipartite(a, b).unwrap());
        }
    }
    for g in graphs {
        if let Some(v) = closed_form(&g) {
            assert_eq!(v, tr2(&g), "{:?}", g.edge_vec());
        }
    }
}

#[test]
fn disconnected_graphs_take_the_maximum() {
    let mut edges = generate::complete(5).unwrap().edge_vec();
    edges.extend([(5, 6), (6, 7)]);
    let g = Graph::from_edges(9, &edges).unwrap();
    let r = solve(&g, Method::Auto, DEFAULT_BUDGET).unwrap();
    assert_eq!(r.tr2, 3);
    assert_eq!(r.components.len(), 3);
    assert_eq!(r.witness.labels()[8], 1);
    assert!(verify_2transitive(&g, &r.witness).unwrap());
}
