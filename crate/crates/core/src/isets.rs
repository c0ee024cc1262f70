//! Exact independent-set engine: branch-and-bound independence number,
//! maximum-independent-set counting and enumeration, the direct
//! 1-extendability test, and weighted variants for representative graphs.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bits::Bits;
use crate::error::{Error, Limits, Result};
use crate::graph::{Graph, VertexSet};
use crate::moddecomp::WeightedGraph;

/// Independence number together with maximum-independent-set counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MisStats {
    pub alpha: usize,
    /// Number of maximum independent sets.
    pub total_mis_count: BigUint,
    /// For each vertex, the number of maximum independent sets containing it.
    pub per_vertex_mis_count: Vec<BigUint>,
}

/// Greedy clique cover of `cand`; the number of cliques bounds α from above.
fn clique_cover_bound(g: &Graph, cand: &Bits) -> usize {
    let mut rem = cand.clone();
    let mut cliques = 0;
    while let Some(u) = rem.first() {
        rem.remove(u);
        let mut grow = rem.and(g.row(u));
        while let Some(w) = grow.first() {
            rem.remove(w);
            grow = grow.and(g.row(w));
        }
        cliques += 1;
    }
    cliques
}

/// Vertex of `cand` with the most neighbors inside `cand`, and that degree.
fn max_degree_in(g: &Graph, cand: &Bits) -> (usize, usize) {
    let mut best = (usize::MAX, 0);
    for v in cand.iter() {
        let d = g.row(v).and_count(cand);
        if best.0 == usize::MAX || d > best.1 {
            best = (v, d);
        }
    }
    best
}

struct BranchAndBound<'g> {
    g: &'g Graph,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl BranchAndBound<'_> {
    fn search(&mut self, cand: Bits) {
        if cand.is_empty() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        if self.current.len() + clique_cover_bound(self.g, &cand) <= self.best.len() {
            return;
        }
        let (v, deg) = max_degree_in(self.g, &cand);
        if deg == 0 {
            let mark = self.current.len();
            self.current.extend(cand.iter());
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            self.current.truncate(mark);
            return;
        }
        self.current.push(v);
        let mut with_v = cand.and_not(self.g.row(v));
        with_v.remove(v);
        self.search(with_v);
        self.current.pop();
        let mut without_v = cand;
        without_v.remove(v);
        self.search(without_v);
    }
}

pub(crate) fn mis_within(g: &Graph, cand: Bits) -> Vec<usize> {
    let mut bb = BranchAndBound { g, best: Vec::new(), current: Vec::new() };
    bb.search(cand);
    bb.best.sort_unstable();
    bb.best
}

/// A maximum independent set of `g`.
pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    VertexSet::from_sorted(mis_within(g, Bits::full(g.n()))).expect("sorted")
}

/// Independence number α(G); 0 for the empty graph.
pub fn alpha(g: &Graph) -> usize {
    mis_within(g, Bits::full(g.n())).len()
}

pub(crate) fn alpha_within(g: &Graph, cand: &Bits) -> usize {
    mis_within(g, cand.clone()).len()
}

/// Vertices of `cand` that lie in some maximum independent set of `G[cand]`,
/// via α(G[cand] − N[v]) = α(G[cand]) − 1.
pub(crate) fn mis_cover_within(g: &Graph, cand: &Bits) -> Bits {
    let a = alpha_within(g, cand);
    let mut cover = Bits::empty(g.n());
    for v in cand.iter() {
        let mut rest = cand.and_not(g.row(v));
        rest.remove(v);
        if alpha_within(g, &rest) + 1 == a {
            cover.insert(v);
        }
    }
    cover
}

/// Vertices contained in at least one maximum independent set.
pub fn mis_cover(g: &Graph) -> VertexSet {
    mis_cover_within(g, &Bits::full(g.n())).iter().collect()
}

/// True iff every vertex lies in some maximum independent set.
pub fn is_1ext_oracle(g: &Graph) -> bool {
    mis_cover_within(g, &Bits::full(g.n())).len() == g.n()
}

/// First vertex lying in no maximum independent set, if any.
pub fn starved_vertex(g: &Graph) -> Option<usize> {
    let cover = mis_cover_within(g, &Bits::full(g.n()));
    (0..g.n()).find(|&v| !cover.contains(v))
}

fn check_mis_cap(g: &Graph, limits: &Limits) -> Result<()> {
    Error::check_budget(
        "vertex count for MIS counting",
        "mis_vertices",
        limits.mis_vertices as u64,
        g.n() as u64,
    )
}

fn binomials(n: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row = vec![BigUint::one(); i + 1];
        for j in 1..i {
            row[j] = &rows[i - 1][j - 1] + &rows[i - 1][j];
        }
        rows.push(row);
    }
    rows
}

struct MisCounter<'a> {
    g: &'a Graph,
    binom: &'a [Vec<BigUint>],
    chosen: Vec<usize>,
    total: BigUint,
    per_vertex: &'a mut [BigUint],
}

impl MisCounter<'_> {
    fn choose(&self, n: usize, k: usize) -> BigUint {
        if k > n {
            BigUint::zero()
        } else {
            self.binom[n][k].clone()
        }
    }

    fn count(&mut self, cand: Bits, need: usize) {
        if need == 0 {
            self.total += 1u32;
            for &v in &self.chosen {
                self.per_vertex[v] += 1u32;
            }
            return;
        }
        let c = cand.len();
        if c < need || clique_cover_bound(self.g, &cand) < need {
            return;
        }
        let (v, deg) = max_degree_in(self.g, &cand);
        if deg == 0 {
            // edgeless remainder: any `need` of the `c` candidates will do
            let all = self.choose(c, need);
            let with_one = self.choose(c - 1, need - 1);
            self.total += &all;
            for &u in &self.chosen {
                self.per_vertex[u] += &all;
            }
            for u in cand.iter() {
                self.per_vertex[u] += &with_one;
            }
            return;
        }
        self.chosen.push(v);
        let mut with_v = cand.and_not(self.g.row(v));
        with_v.remove(v);
        self.count(with_v, need - 1);
        self.chosen.pop();
        let mut without_v = cand;
        without_v.remove(v);
        self.count(without_v, need);
    }
}

/// Exact α, #α and per-vertex #_vα by exhaustive branching.
pub fn mis_stats(g: &Graph, limits: &Limits) -> Result<MisStats> {
    check_mis_cap(g, limits)?;
    // maximum independent sets factor over connected components
    let binom = binomials(g.n());
    let mut alpha = 0;
    let mut total = BigUint::one();
    let mut per_vertex = vec![BigUint::zero(); g.n()];
    let mut comp_totals = Vec::new();
    let comps = components(g);
    for comp in &comps {
        let a = alpha_within(g, comp);
        let mut counter = MisCounter {
            g,
            binom: &binom,
            chosen: Vec::new(),
            total: BigUint::zero(),
            per_vertex: &mut per_vertex,
        };
        counter.count(comp.clone(), a);
        alpha += a;
        total *= &counter.total;
        comp_totals.push(counter.total);
    }
    for (i, comp) in comps.iter().enumerate() {
        let others: BigUint = comp_totals
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, t)| t)
            .product();
        for v in comp.iter() {
            per_vertex[v] *= &others;
        }
    }
    Ok(MisStats { alpha, total_mis_count: total, per_vertex_mis_count: per_vertex })
}

fn components(g: &Graph) -> Vec<Bits> {
    let mut seen = vec![false; g.n()];
    let mut comps = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            for &w in g.neighbors(comp[i]) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        comps.push(Bits::from_iter(g.n(), comp));
    }
    comps
}

/// Lazily yields every maximum independent set once, in lexicographic order
/// of the sorted vertex lists.
pub struct MaxIndependentSets<'g> {
    g: &'g Graph,
    alpha: usize,
    stack: Vec<(Vec<usize>, Bits)>,
}

impl Iterator for MaxIndependentSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        while let Some((chosen, cand)) = self.stack.pop() {
            if chosen.len() == self.alpha {
                return Some(VertexSet::from_sorted(chosen).expect("ascending by construction"));
            }
            let need = self.alpha - chosen.len();
            if cand.len() < need || clique_cover_bound(self.g, &cand) < need {
                continue;
            }
            let v = cand.first().expect("nonempty");
            let mut without_v = cand.clone();
            without_v.remove(v);
            self.stack.push((chosen.clone(), without_v));
            let mut with_v = cand.and_not(self.g.row(v));
            with_v.remove(v);
            let mut chosen = chosen;
            chosen.push(v);
            self.stack.push((chosen, with_v));
        }
        None
    }
}

pub fn enumerate_max_independent_sets<'g>(
    g: &'g Graph,
    limits: &Limits,
) -> Result<MaxIndependentSets<'g>> {
    check_mis_cap(g, limits)?;
    let a = alpha(g);
    Ok(MaxIndependentSets { g, alpha: a, stack: vec![(Vec::new(), Bits::full(g.n()))] })
}

/// Max total weight of an independent set inside `within` and the union of
/// all maximum-weight independent sets, by scanning the maximal independent
/// sets of a graph on at most 32 vertices given as bitmask rows. Weights of
/// vertices in `within` must be positive.
pub(crate) fn weighted_scan(rows: &[u32], weights: &[u64], within: u32) -> (u64, u32) {
    fn rec(rows: &[u32], weights: &[u64], set: u32, cand: u32, w: u64, best: &mut (u64, u32)) {
        if cand == 0 {
            if w > best.0 {
                *best = (w, set);
            } else if w == best.0 {
                best.1 |= set;
            }
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // only extend upward so each set is built once
            let next = cand & !rows[v] & !(u32::MAX >> (31 - v));
            rec(rows, weights, set | 1 << v, next, w + weights[v], best);
        }
    }
    let mut best = (0u64, 0u32);
    rec(rows, weights, 0, within, 0, &mut best);
    best
}

pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

fn weighted_rows(h: &WeightedGraph, limits: &Limits) -> Result<Vec<u32>> {
    let n = h.base.n();
    Error::check_budget(
        "weighted graph order",
        "weighted_vertices",
        limits.weighted_vertices.min(32) as u64,
        n as u64,
    )?;
    Ok((0..n).map(|v| h.base.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u)).collect())
}

/// Maximum total weight of an independent set of `h`.
pub fn weighted_alpha(h: &WeightedGraph, limits: &Limits) -> Result<u64> {
    let rows = weighted_rows(h, limits)?;
    Ok(weighted_scan(&rows, &h.weights, full_mask(rows.len())).0)
}

/// True iff every vertex of `h` lies in some maximum-weight independent set.
pub fn weighted_is_1ext(h: &WeightedGraph, limits: &Limits) -> Result<bool> {
    let rows = weighted_rows(h, limits)?;
    let n = rows.len();
    let (_, cover) = weighted_scan(&rows, &h.weights, full_mask(n));
    Ok(cover.count_ones() as usize == n)
}
