//! Acceptance suite: each criterion prints one PASS/FAIL line; the process
//! exits nonzero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use oneext::genset::{self, GenSetInstance};
use oneext::partition::{self, Partition};
use oneext::{decompose, extend, generators, isets, metrics, moddecomp, Graph, Limits};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{brute_feasible_tuples, graph_from_mask, random_cograph, random_graph, subset_table};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn verify(g: &Graph, p: &Partition, what: &str) -> Result<(), String> {
    check(partition::verify_partition(g, p).unwrap(), || format!("{what}: certificate rejected"))
}

fn ceil_2_sqrt(n: usize) -> usize {
    (0..).find(|c| c * c >= 4 * n).unwrap()
}

fn floor_log2_plus_1(alpha: usize) -> usize {
    (usize::BITS - alpha.leading_zeros()) as usize
}

fn c1_oracle_1ext() -> Outcome {
    let limits = Limits::default();
    let mut mismatches = Vec::new();
    let mut count = 0;
    let mut test = |g: &Graph| {
        let report = extend::is_1ext_mw(g, &decompose(g).unwrap(), &limits).unwrap();
        if report.is_1ext != isets::is_1ext_oracle(g) {
            mismatches.push(format!("{g:?}"));
        }
        count += 1;
    };
    for mask in 0..1u64 << 15 {
        test(&graph_from_mask(6, mask));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in [7, 8] {
        for _ in 0..10_000 {
            let p = rng.gen_range(0.1..0.9);
            test(&random_graph(&mut rng, n, p));
        }
    }
    check(mismatches.is_empty(), || format!("{} mismatches, first {}", mismatches.len(), mismatches[0]))?;
    Ok(format!("{count} graphs, 0 mismatches"))
}

fn c2_oracle_tuples() -> Outcome {
    let limits = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..1000 {
        let n = rng.gen_range(1..=7);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let t = decompose(&g).unwrap();
        let table = subset_table(&g);
        for k in 1..=3 {
            let dp = partition::feasible_tuples_mw(&g, &t, k, &limits).unwrap().to_vecs();
            let brute = brute_feasible_tuples(&g, &table, k);
            check(dp == brute, || format!("graph {i} {g:?}, k={k}: dp {dp:?} vs brute {brute:?}"))?;
        }
    }
    Ok("1000 graphs x k in {1,2,3}, 0 mismatches".into())
}

fn c3_multipartite_extremal() -> Outcome {
    let limits = Limits::default();
    let mut got = Vec::new();
    for k in 0..=4u32 {
        let (g, _) = generators::multipartite_extremal(k);
        let (chi, p) = partition::chi_1ext(&g, &limits).unwrap();
        verify(&g, &p, "multipartite extremal")?;
        check(chi == k as usize + 1, || format!("k={k}: chi {chi}, expected {}", k + 1))?;
        got.push(chi);
    }
    Ok(format!("chi for k=0..4: {got:?}"))
}

fn c4_interval_extremal() -> Outcome {
    let limits = Limits::default();
    let mut got = Vec::new();
    for k in 1..=4u32 {
        let g = generators::interval_extremal(k).unwrap();
        let (chi, p) = partition::chi_1ext(&g, &limits).unwrap();
        verify(&g, &p, "interval extremal")?;
        check(chi == k as usize, || format!("k={k}: chi {chi}, expected {k}"))?;
        got.push(chi);
    }
    Ok(format!("chi for k=1..4: {got:?}"))
}

fn c5_uneven_multipartite() -> Outcome {
    let limits = Limits::default();
    let sizes = [2, 3, 4, 7, 9];
    let (g, _) = Graph::complete_multipartite(&sizes).unwrap();
    let (chi, p) = partition::chi_1ext(&g, &limits).unwrap();
    check(chi == 3, || format!("chi {chi}, expected 3"))?;
    verify(&g, &p, "chi certificate")?;
    let inst = genset::to_instance(&sizes, 3).unwrap();
    let sol = genset::solve(&inst, &limits).unwrap().ok_or("genset infeasible")?;
    check(sol.generators == [2, 3, 4], || format!("generators {:?}", sol.generators))?;
    let values = |i: usize| sol.subsets[i].iter().map(|&j| sol.generators[j]).collect::<Vec<_>>();
    check(values(3) == [3, 4] && values(4) == [2, 3, 4], || format!("7 = {:?}, 9 = {:?}", values(3), values(4)))?;
    let from = genset::from_solution(&sizes, &sol).unwrap();
    verify(&g, &from, "genset partition")?;
    let two = GenSetInstance::new(vec![2, 3, 4, 7, 9], 2).unwrap();
    check(genset::solve(&two, &limits).unwrap().is_none(), || "k=2 should be infeasible".into())?;
    Ok("chi=3, generators 2 3 4 with 7=3+4 and 9=2+3+4, partition verified".into())
}

fn c6_throughput_limits() -> Outcome {
    let limits = Limits::default();
    let q = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
    let paw = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 2)]).unwrap();
    let cases = [
        ("P4", Graph::path(4), [q(2, 3), q(1, 3), q(1, 3), q(2, 3)], [0.63, 0.41, 0.41, 0.63]),
        ("paw", paw, [q(1, 2), q(1, 2), q(0, 1), q(1, 1)], [0.5, 0.5, 0.075, 0.93]),
    ];
    let mut lines = Vec::new();
    for (name, g, exact, bars) in cases {
        let prof = metrics::access_proportion(&g, &q(50, 1), &limits).unwrap();
        check(prof.limit_p == exact, || format!("{name}: limits {:?}", prof.limit_p))?;
        for (lim, bar) in prof.limit_p.iter().zip(bars) {
            let x = metrics::to_f64(lim);
            check((x - bar).abs() <= 0.1, || format!("{name}: limit {x} vs bar {bar}"))?;
        }
        let shown: Vec<String> = prof.limit_p.iter().map(ToString::to_string).collect();
        lines.push(format!("{name} ({})", shown.join(", ")));
    }
    Ok(lines.join("; "))
}

/// Checks the constructive bounds, and the exact number when the DP fits in
/// the budget; returns whether it did.
fn bound_checks(g: &Graph, limits: &Limits) -> Result<bool, String> {
    let n = g.n();
    let alpha = isets::alpha(g);
    let peel = partition::peel_partition(g);
    verify(g, &peel, "peel")?;
    check(peel.class_count() <= alpha.max(1), || format!("peel uses {} > alpha {alpha}", peel.class_count()))?;
    let greedy = partition::greedy_sqrt_partition(g);
    verify(g, &greedy, "greedy")?;
    check(greedy.class_count() <= ceil_2_sqrt(n), || {
        format!("greedy uses {} > ceil(2 sqrt {n})", greedy.class_count())
    })?;
    let t = decompose(g).unwrap();
    if moddecomp::is_cograph(&t) {
        let log = partition::log_partition_cograph(g, &t).unwrap();
        verify(g, &log, "log partition")?;
        check(log.class_count() <= floor_log2_plus_1(alpha), || {
            format!("log partition uses {} classes, alpha {alpha}", log.class_count())
        })?;
    }
    let (chi, p) = match partition::chi_1ext(g, limits) {
        Ok(found) => found,
        Err(oneext::Error::Budget { .. }) => return Ok(false),
        Err(e) => return Err(e.to_string()),
    };
    verify(g, &p, "chi")?;
    check(p.class_count() == chi, || format!("chi {chi} but certificate has {} classes", p.class_count()))?;
    check(chi <= alpha && chi <= ceil_2_sqrt(n), || format!("chi {chi}, alpha {alpha}, n {n}"))?;
    Ok(true)
}

fn c7_bounds() -> Outcome {
    // exact numbers only where the prime-node products stay small
    let limits = Limits { prime_products: 1 << 18, ..Limits::default() };
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut cographs = 0;
    let mut exact = 0;
    for i in 0..1000 {
        let n = rng.gen_range(1..=30);
        let g = if i % 2 == 0 {
            let p = rng.gen_range(0.05..0.95);
            random_graph(&mut rng, n, p)
        } else {
            cographs += 1;
            random_cograph(&mut rng, n)
        };
        exact += usize::from(bound_checks(&g, &limits).map_err(|e| format!("graph {i} {g:?}: {e}"))?);
    }
    let mut family = Vec::new();
    for k in 0..=4 {
        family.push(generators::multipartite_extremal(k).0);
    }
    for k in 1..=5 {
        family.push(generators::interval_extremal(k).unwrap());
    }
    family.push(Graph::complete_multipartite(&[2, 3, 4, 7, 9]).unwrap().0);
    for k in 2..=3 {
        family.push(generators::hardness_gadget(&Graph::path(4), k).unwrap());
        family.push(generators::hardness_gadget(&Graph::cycle(5), k).unwrap());
    }
    for g in &family {
        exact += usize::from(bound_checks(g, &limits).map_err(|e| format!("family graph n={}: {e}", g.n()))?);
    }
    Ok(format!(
        "1000 random graphs ({cographs} cographs) + {} family graphs, exact chi on {exact}, 0 violations",
        family.len()
    ))
}

fn c8_split_integers() -> Outcome {
    let mut count = 0;
    for a1 in 0..=30u64 {
        for a2 in 0..=30u64 {
            for k in 0..=a1 + a2 {
                let (k1, k2) = partition::split_integers(a1, a2, k).unwrap();
                let m = |k: u64, a: u64| (k as i64 - 1).max(a as i64 - k as i64);
                let ok = k1 <= a1 && k2 <= a2 && k1 + k2 == k && m(k1, a1) + m(k2, a2) <= m(k, a1 + a2);
                check(ok, || format!("({a1}, {a2}, {k}) -> ({k1}, {k2})"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} triples, 0 violations"))
}

fn c9_hardness_gadget() -> Outcome {
    let limits = Limits::default();
    let mut count = 0;
    for n in 1..=5usize {
        for mask in 0..1u64 << (n * (n - 1) / 2) {
            let g = graph_from_mask(n, mask);
            for k in 2..=3 {
                let gadget = generators::hardness_gadget(&g, k).unwrap();
                let lhs = partition::chi_1ext_bounded(&gadget, k, &limits).unwrap().is_some();
                let rhs = partition::chi_1ext_bounded(&g, k - 1, &limits).unwrap().is_some();
                check(lhs == rhs, || format!("{g:?}, k={k}: gadget {lhs}, graph {rhs}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} (graph, k) pairs, 0 mismatches"))
}

fn c10_weighted_representative() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let limits = Limits::default();
    for i in 0..1000 {
        let n = rng.gen_range(2..=10);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let t = decompose(&g).unwrap();
        let h = moddecomp::weighted_representative(&g, &t, t.root()).unwrap();
        let (wa, a) = (isets::weighted_alpha(&h, &limits).unwrap(), isets::alpha(&g));
        check(wa == a as u64, || format!("graph {i} {g:?}: weighted alpha {wa}, alpha {a}"))?;
        check(t.reconstruct() == g, || format!("graph {i} {g:?}: reconstruction differs"))?;
    }
    Ok("1000 graphs, 0 mismatches".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("oracle equivalence, 1-extendability", c1_oracle_1ext),
        ("oracle equivalence, feasible tuples", c2_oracle_tuples),
        ("extremal multipartite family", c3_multipartite_extremal),
        ("extremal interval family", c4_interval_extremal),
        ("complete multipartite 2,3,4,7,9", c5_uneven_multipartite),
        ("throughput limits", c6_throughput_limits),
        ("bound suite", c7_bounds),
        ("split_integers exhaustive", c8_split_integers),
        ("hardness gadget equivalence", c9_hardness_gadget),
        ("weighted representative soundness", c10_weighted_representative),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let label = format!("{} {name}", i + 1);
        if !filter.is_empty() && !filter.iter().any(|f| label.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {label}: {detail} ({secs:.1}s)"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {label}: {detail} ({secs:.1}s)");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
