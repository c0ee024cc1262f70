//! Brute-force oracles and graph samplers shared by the integration tests.
#![allow(dead_code)]

use oneext::Graph;
use rand::Rng;

pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Graph on `n` vertices whose edge set is selected by the bits of `mask`
/// over `all_pairs(n)`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges = all_pairs(n).into_iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e);
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = all_pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).unwrap()
}

/// Random cograph built from a random cotree.
pub fn random_cograph(rng: &mut impl Rng, n: usize) -> Graph {
    if n <= 1 {
        return Graph::empty(n);
    }
    let left = rng.gen_range(1..n);
    let a = random_cograph(rng, left);
    let b = random_cograph(rng, n - left);
    if rng.gen_bool(0.5) {
        a.disjoint_union(&b)
    } else {
        a.complete_sum(&b)
    }
}

/// Adjacency rows as bitmasks, for graphs on at most 32 vertices.
pub fn rows(g: &Graph) -> Vec<u32> {
    let mut rows = vec![0u32; g.n()];
    for &(u, v) in g.edges() {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    }
    rows
}

/// For every vertex subset `s` of a graph with at most 20 vertices:
/// `alpha[s]` and whether `G[s]` is 1-extendable, by plain subset
/// enumeration. The empty set counts as 1-extendable with α = 0.
pub struct SubsetTable {
    pub alpha: Vec<u8>,
    pub one_ext: Vec<bool>,
}

pub fn subset_table(g: &Graph) -> SubsetTable {
    let n = g.n();
    assert!(n <= 20);
    let rows = rows(g);
    let size = 1usize << n;
    let mut independent = vec![false; size];
    independent[0] = true;
    for s in 1..size {
        let v = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        independent[s] = independent[rest] && rows[v] as usize & rest == 0;
    }
    // alpha[s] = largest independent subset; cover[s] = union of those
    let mut alpha = vec![0u8; size];
    let mut cover = vec![0usize; size];
    for s in 1..size {
        if independent[s] {
            alpha[s] = s.count_ones() as u8;
            cover[s] = s;
            continue;
        }
        let mut best = 0u8;
        let mut union = 0usize;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let sub = s & !(1 << v);
            if alpha[sub] > best {
                best = alpha[sub];
                union = cover[sub];
            } else if alpha[sub] == best {
                union |= cover[sub];
            }
        }
        alpha[s] = best;
        cover[s] = union;
    }
    let one_ext = (0..size).map(|s| cover[s] == s).collect();
    SubsetTable { alpha, one_ext }
}

/// Every feasible k-tuple: per-class α of all k^n colorings whose classes
/// are all 1-extendable. Sorted and deduplicated.
pub fn brute_feasible_tuples(g: &Graph, table: &SubsetTable, k: usize) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut out = Vec::new();
    let mut color = vec![0usize; n];
    loop {
        let mut masks = vec![0usize; k];
        for (v, &c) in color.iter().enumerate() {
            masks[c] |= 1 << v;
        }
        if masks.iter().all(|&m| table.one_ext[m]) {
            out.push(masks.iter().map(|&m| table.alpha[m] as u32).collect());
        }
        // next coloring in base k
        let mut i = 0;
        while i < n && color[i] == k - 1 {
            color[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        color[i] += 1;
    }
    out.sort();
    out.dedup();
    out
}

/// Smallest k with a 1-extendable k-partition, by k^n enumeration.
pub fn brute_chi(g: &Graph, table: &SubsetTable) -> usize {
    if g.n() == 0 {
        return 0;
    }
    (1..).find(|&k| !brute_feasible_tuples(g, table, k).is_empty()).unwrap()
}

/// Classical chromatic number by subset DP.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.n();
    let rows = rows(g);
    let size = 1usize << n;
    let independent: Vec<bool> = (0..size)
        .map(|s| (0..n).all(|v| s >> v & 1 == 0 || rows[v] as usize & s == 0))
        .collect();
    let mut best = vec![usize::MAX; size];
    best[0] = 0;
    for s in 1..size {
        let low = s & s.wrapping_neg();
        // classes containing the lowest vertex
        let mut sub = s;
        while sub != 0 {
            if sub & low != 0 && independent[sub] && best[s ^ sub] != usize::MAX {
                best[s] = best[s].min(best[s ^ sub] + 1);
            }
            sub = (sub - 1) & s;
        }
    }
    best[size - 1]
}

pub fn arb_graph(min_n: usize, max_n: usize) -> impl proptest::strategy::Strategy<Value = Graph> {
    use proptest::prelude::*;
    (min_n..=max_n).prop_flat_map(|n| {
        let m = n * n.saturating_sub(1) / 2;
        (Just(n), proptest::collection::vec(any::<bool>(), m))
    })
    .prop_map(|(n, keep)| {
        let edges = all_pairs(n).into_iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

pub fn arb_cograph(max_n: usize) -> impl proptest::strategy::Strategy<Value = Graph> {
    use proptest::prelude::*;
    use rand::SeedableRng;
    (1..=max_n, any::<u64>())
        .prop_map(|(n, seed)| random_cograph(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed), n))
}
