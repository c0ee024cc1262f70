mod common;

use oneext::partition::{self, Partition};
use oneext::{decompose, extend, isets, moddecomp, Graph, Limits};
use proptest::prelude::*;

use common::{
    arb_cograph, arb_graph, brute_chi, brute_feasible_tuples, chromatic_number, graph_from_mask, subset_table,
};

#[test]
fn tuple_sets_match_brute_force_exhaustively() {
    let limits = Limits::default();
    for n in 1..=5usize {
        for mask in 0..1u64 << (n * (n - 1) / 2) {
            let g = graph_from_mask(n, mask);
            let t = decompose(&g).unwrap();
            let table = subset_table(&g);
            for k in 1..=3 {
                let dp = partition::feasible_tuples_mw(&g, &t, k, &limits).unwrap().to_vecs();
                assert_eq!(dp, brute_feasible_tuples(&g, &table, k), "{g:?} k={k}");
            }
        }
    }
}

fn floor_log2_plus_1(alpha: usize) -> usize {
    (usize::BITS - alpha.leading_zeros()) as usize
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn chi_matches_brute_force_and_bounds(g in arb_graph(1, 7)) {
        let limits = Limits::default();
        let (chi, p) = partition::chi_1ext(&g, &limits).unwrap();
        prop_assert_eq!(chi, brute_chi(&g, &subset_table(&g)));
        prop_assert_eq!(p.class_count(), chi);
        prop_assert!(partition::verify_partition(&g, &p).unwrap());
        prop_assert!(chi <= chromatic_number(&g));
        prop_assert!(chi <= isets::alpha(&g));
        for k in 1..=chi + 1 {
            prop_assert_eq!(partition::chi_1ext_bounded(&g, k, &limits).unwrap().is_some(), k >= chi);
        }
    }

    #[test]
    fn feasibility_is_monotone_in_k(g in arb_graph(1, 9)) {
        let limits = Limits::default();
        let t = decompose(&g).unwrap();
        let mut prev = partition::feasible_tuples_mw(&g, &t, 1, &limits).unwrap();
        for k in 2..=3 {
            let next = partition::feasible_tuples_mw(&g, &t, k, &limits).unwrap();
            for tuple in prev.iter() {
                let mut padded = tuple.to_vec();
                padded.push(0);
                prop_assert!(next.contains(&padded), "{:?} at k={}", padded, k);
            }
            prev = next;
        }
    }

    #[test]
    fn cograph_dp_agrees_with_modular_dp(g in arb_cograph(12)) {
        let limits = Limits::default();
        let t = decompose(&g).unwrap();
        prop_assert!(moddecomp::is_cograph(&t));
        for k in 1..=3 {
            let a = partition::feasible_tuples_cograph(&t, k, &limits).unwrap();
            let b = partition::feasible_tuples_mw(&g, &t, k, &limits).unwrap();
            prop_assert_eq!(a.to_vecs(), b.to_vecs());
        }
        let report = extend::is_1ext_cograph(&t).unwrap();
        prop_assert_eq!(report.is_1ext, isets::is_1ext_oracle(&g));
        prop_assert_eq!(report.alpha, isets::alpha(&g));
    }

    #[test]
    fn constructive_partitions_verify(g in arb_graph(1, 24)) {
        let alpha = isets::alpha(&g);
        let peel = partition::peel_partition(&g);
        prop_assert!(partition::verify_partition(&g, &peel).unwrap());
        prop_assert!(peel.class_count() <= alpha);
        let greedy = partition::greedy_sqrt_partition(&g);
        prop_assert!(partition::verify_partition(&g, &greedy).unwrap());
        prop_assert!(greedy.class_count() * greedy.class_count() <= 4 * g.n());
    }

    #[test]
    fn log_partition_on_cographs(g in arb_cograph(40)) {
        let t = decompose(&g).unwrap();
        let p = partition::log_partition_cograph(&g, &t).unwrap();
        prop_assert!(partition::verify_partition(&g, &p).unwrap());
        prop_assert!(p.class_count() <= floor_log2_plus_1(isets::alpha(&g)));
    }

    /// Vertices split into c induced cographs admit a partition with
    /// c·(⌊log₂ α⌋ + 1) classes: one palette per cograph.
    #[test]
    fn unions_of_cographs(parts in proptest::collection::vec(arb_cograph(5), 1..=3), seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut g = Graph::empty(0);
        let mut offsets = Vec::new();
        for part in &parts {
            offsets.push(g.n());
            g = g.disjoint_union(part);
        }
        let mut edges = g.edges().to_vec();
        for (i, a) in parts.iter().enumerate() {
            for (j, b) in parts.iter().enumerate().skip(i + 1) {
                for u in 0..a.n() {
                    for v in 0..b.n() {
                        if rng.gen_bool(0.4) {
                            edges.push((offsets[i] + u, offsets[j] + v));
                        }
                    }
                }
            }
        }
        let g = Graph::from_edges(g.n(), edges).unwrap();
        let alpha = isets::alpha(&g);
        let budget = parts.len() * floor_log2_plus_1(alpha);
        let mut color = vec![0; g.n()];
        let mut base = 0;
        for (part, &off) in parts.iter().zip(&offsets) {
            let p = partition::log_partition_cograph(part, &decompose(part).unwrap()).unwrap();
            for v in 0..part.n() {
                color[off + v] = base + p.colors()[v];
            }
            base += p.k();
        }
        let built = Partition::new(base, color).unwrap();
        prop_assert!(partition::verify_partition(&g, &built).unwrap());
        prop_assert!(built.class_count() <= budget);
        let (chi, _) = partition::chi_1ext(&g, &Limits::default()).unwrap();
        prop_assert!(chi <= budget);
    }
}
