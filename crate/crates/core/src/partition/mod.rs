//! 1-extendable partitions: certificates, the feasible-tuple DP that decides
//! χ₁₋ₑₓₜ, and constructive upper bounds.

mod bounds;
mod dp;
mod tuples;

pub use bounds::{greedy_sqrt_partition, log_partition_cograph, peel_partition, split_integers};
pub use dp::{feasible_tuples_cograph, feasible_tuples_mw, partition_at_most, TupleDp};
pub use tuples::{tuple_join, tuple_sum, FeasibleTupleSet, Witness};

use crate::error::{Error, Limits, Result};
use crate::graph::{Graph, VertexSet};
use crate::isets;
use crate::moddecomp;

/// Total coloring of the vertices with colors `0..k`; classes may be empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    k: usize,
    color: Vec<usize>,
}

impl Partition {
    pub fn new(k: usize, color: Vec<usize>) -> Result<Self> {
        if let Some(v) = color.iter().position(|&c| c >= k) {
            return Err(Error::input(format!("vertex {v} has color {} outside 0..{k}", color[v])));
        }
        Ok(Partition { k, color })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[usize] {
        &self.color
    }

    pub fn color_of(&self, v: usize) -> usize {
        self.color[v]
    }

    /// Vertex sets of colors `0..k`, in color order.
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut classes = vec![Vec::new(); self.k];
        for (v, &c) in self.color.iter().enumerate() {
            classes[c].push(v);
        }
        classes.into_iter().map(|c| VertexSet::from_sorted(c).expect("ascending")).collect()
    }

    /// Number of nonempty classes.
    pub fn class_count(&self) -> usize {
        let mut used = vec![false; self.k];
        for &c in &self.color {
            used[c] = true;
        }
        used.into_iter().filter(|&u| u).count()
    }

    /// Drops empty classes, renumbering the rest in order of first use.
    pub fn compacted(&self) -> Partition {
        let mut map = vec![usize::MAX; self.k];
        let mut next = 0;
        let color = self
            .color
            .iter()
            .map(|&c| {
                if map[c] == usize::MAX {
                    map[c] = next;
                    next += 1;
                }
                map[c]
            })
            .collect();
        Partition { k: next, color }
    }
}

/// True iff every nonempty class induces a 1-extendable subgraph.
pub fn verify_partition(g: &Graph, p: &Partition) -> Result<bool> {
    if p.color.len() != g.n() {
        return Err(Error::input(format!(
            "partition colors {} vertices, graph has {}",
            p.color.len(),
            g.n()
        )));
    }
    for class in p.classes() {
        if !class.is_empty() && !isets::is_1ext_oracle(&g.induced_subgraph(&class)?.graph) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Smallest constructive partition available without the DP: α-peeling,
/// greedy √n stripping and, on cographs, logarithmic halving.
fn best_constructive(g: &Graph, t: &moddecomp::MDTree) -> Result<Partition> {
    let mut best = peel_partition(g);
    let greedy = greedy_sqrt_partition(g);
    if greedy.class_count() < best.class_count() {
        best = greedy;
    }
    if moddecomp::is_cograph(t) {
        let log = log_partition_cograph(g, t)?;
        if log.class_count() < best.class_count() {
            best = log;
        }
    }
    Ok(best.compacted())
}

/// χ₁₋ₑₓₜ(g) if it is at most `max_k`, with a certificate using exactly that
/// many classes.
///
/// The constructive bounds give an upper bound `u` with a ready certificate;
/// the DP then only runs for `k < min(u, max_k + 1)`, ascending.
pub fn chi_1ext_bounded(g: &Graph, max_k: usize, limits: &Limits) -> Result<Option<(usize, Partition)>> {
    if g.n() == 0 {
        return Ok(Some((0, Partition { k: 0, color: Vec::new() })));
    }
    let t = moddecomp::decompose(g)?;
    let upper = best_constructive(g, &t)?;
    let u = upper.class_count();
    for k in 1..u.min(max_k.saturating_add(1)) {
        if let Some(p) = partition_at_most(g, &t, k, limits)? {
            return Ok(Some((k, p.compacted())));
        }
    }
    Ok((u <= max_k).then_some((u, upper)))
}

/// The 1-extendable chromatic number with a certificate partition.
pub fn chi_1ext(g: &Graph, limits: &Limits) -> Result<(usize, Partition)> {
    Ok(chi_1ext_bounded(g, usize::MAX, limits)?.expect("unbounded search always answers"))
}
