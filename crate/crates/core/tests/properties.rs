use proptest::prelude::*;

use dpc_core::brute::brute_hom;
use dpc_core::canon::canonical_key;
use dpc_core::classify::gen_host;
use dpc_core::digraph::{tensor, Digraph};
use dpc_core::format::{parse_digraph, write_digraph};
use dpc_core::hom::count_hom;
use dpc_core::hypergraph::{fhtw, Hypergraph};
use dpc_core::limits::Limits;

fn digraph(max_n: usize, loops: bool) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let arcs = (0..n * n)
                .filter(|&i| bits[i])
                .map(|i| (i / n, i % n))
                .filter(|&(u, v)| loops || u != v);
            Digraph::new(n, arcs).unwrap()
        })
    })
}

fn relabeled(d: &Digraph, perm: &[usize]) -> Digraph {
    Digraph::new(d.vertex_count(), d.arcs().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

fn hypergraph() -> impl Strategy<Value = Hypergraph> {
    (1..=7usize).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::btree_set(0..n, 1..=n), 1..=6).prop_map(move |edges| {
            let mut sets: Vec<Vec<usize>> = edges.into_iter().map(|e| e.into_iter().collect()).collect();
            for v in 0..n {
                if !sets.iter().any(|s| s.contains(&v)) {
                    sets.push(vec![v]);
                }
            }
            Hypergraph::from_sets(n, sets).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn canonical_key_ignores_labels(
        (d, perm) in digraph(6, true).prop_flat_map(|d| {
            let n = d.vertex_count();
            (Just(d), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
    ) {
        let l = Limits::default();
        prop_assert_eq!(canonical_key(&d, l.canon).unwrap(), canonical_key(&relabeled(&d, &perm), l.canon).unwrap());
    }

    #[test]
    fn engine_matches_brute_force(h in digraph(4, true), g in digraph(7, true)) {
        prop_assert_eq!(count_hom(&h, &g).unwrap(), brute_hom(&h, &g, &Limits::default()).unwrap());
    }

    #[test]
    fn hom_counts_multiply_over_tensors(f in digraph(3, true), a in digraph(4, true), b in digraph(4, true)) {
        let product = count_hom(&f, &a).unwrap() * count_hom(&f, &b).unwrap();
        prop_assert_eq!(count_hom(&f, &tensor(&a, &b)).unwrap(), product);
    }

    #[test]
    fn fhtw_witness_is_valid_and_tight(h in hypergraph()) {
        let (width, td) = fhtw(&h, Limits::default().fhtw).unwrap();
        let edges: Vec<Vec<usize>> = h.edges().iter().map(|e| e.vertices.clone()).collect();
        td.validate(h.vertex_count(), &edges).unwrap();
        prop_assert_eq!(td.fractional_width(&h).unwrap(), width);
    }

    #[test]
    fn generated_hosts_respect_parameters(n in 1..300usize, d in 0..5usize, seed: u64, acyclic: bool, loops: bool) {
        let g = gen_host(n, d, seed, acyclic, loops);
        prop_assert_eq!(g.vertex_count(), n);
        prop_assert!(g.max_outdegree() <= d);
        prop_assert!(loops || !g.has_loops());
        prop_assert!(!acyclic || g.without_loops().is_acyclic());
    }

    #[test]
    fn text_format_round_trips(d in digraph(8, true)) {
        prop_assert_eq!(parse_digraph(&write_digraph(&d)).unwrap(), d);
    }
}
