//! Constructive upper bounds: α-peeling, greedy √n stripping, and the
//! logarithmic halving partition of cographs.

use super::Partition;
use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::isets;
use crate::moddecomp::{self, MDTree, NodeId, NodeKind};

/// Repeatedly removes the set of all vertices lying in some maximum
/// independent set of what remains. Each stratum is 1-extendable and α drops
/// by one per round, so at most α classes.
pub fn peel_partition(g: &Graph) -> Partition {
    let mut color = vec![0; g.n()];
    let k = peel_into(g, Bits::full(g.n()), 0, &mut color);
    Partition::new(k, color).expect("colors below k")
}

fn peel_into(g: &Graph, mut rest: Bits, first: usize, color: &mut [usize]) -> usize {
    let mut next = first;
    while !rest.is_empty() {
        let layer = isets::mis_cover_within(g, &rest);
        for v in layer.iter() {
            color[v] = next;
        }
        rest = rest.and_not(&layer);
        next += 1;
    }
    next
}

/// Greedily strips maximum independent sets while they have at least √n
/// vertices, one class each, then peels the remainder (whose α is below √n).
/// At most ⌈2√n⌉ classes; a 1-extendable input gets a single class.
pub fn greedy_sqrt_partition(g: &Graph) -> Partition {
    let n = g.n();
    if isets::is_1ext_oracle(g) {
        return Partition::new(usize::from(n > 0), vec![0; n]).expect("single class");
    }
    let mut color = vec![0; n];
    let mut rest = Bits::full(n);
    let mut next = 0;
    loop {
        let s = isets::mis_within(g, rest.clone());
        if s.is_empty() || s.len() * s.len() < n {
            break;
        }
        for &v in &s {
            color[v] = next;
            rest.remove(v);
        }
        next += 1;
    }
    let k = peel_into(g, rest, next, &mut color);
    Partition::new(k, color).expect("colors below k")
}

/// Splits `k` into `k1 + k2` with `k1 ≤ alpha1`, `k2 ≤ alpha2` and
/// `max(k1-1, alpha1-k1) + max(k2-1, alpha2-k2) ≤ max(k-1, alpha1+alpha2-k)`.
pub fn split_integers(alpha1: u64, alpha2: u64, k: u64) -> Result<(u64, u64)> {
    if k > alpha1 + alpha2 {
        return Err(Error::input(format!("k = {k} exceeds {alpha1} + {alpha2}")));
    }
    if alpha1 == 0 {
        return Ok((0, k));
    }
    if alpha2 == 0 {
        return Ok((k, 0));
    }
    // each side at least half its α (rounded up), so both maxima are k_i - 1
    let (lo1, lo2) = ((alpha1 + 1).div_ceil(2), (alpha2 + 1).div_ceil(2));
    if k >= lo1 + lo2 {
        let k1 = lo1.max(k.saturating_sub(alpha2));
        return Ok((k1, k - k1));
    }
    // each side at most half its α (rounded up), so both maxima are α_i - k_i
    let (hi1, hi2) = (alpha1.div_ceil(2), alpha2.div_ceil(2));
    if k <= hi1 + hi2 {
        let k1 = k.saturating_sub(hi2);
        return Ok((k1, k - k1));
    }
    // both even and k = (α1 + α2)/2 + 1
    debug_assert!(alpha1.is_multiple_of(2) && alpha2.is_multiple_of(2) && k == (alpha1 + alpha2) / 2 + 1);
    Ok((alpha1 / 2 + 1, alpha2 / 2))
}

struct Halving<'a> {
    tree: &'a MDTree,
    alpha: Vec<usize>,
    picked: Vec<usize>,
}

impl Halving<'_> {
    /// Puts into `picked` a vertex set `V1` of `node`'s module with `G[V1]`
    /// 1-extendable, `α(G[V1]) = k`, and `α` of the rest at most
    /// `max(k - 1, α - k)`.
    fn extract(&mut self, node: NodeId, k: usize) {
        let nd = self.tree.node(node);
        match nd.kind {
            NodeKind::Leaf(v) => {
                if k == 1 {
                    self.picked.push(v);
                }
            }
            _ => self.extract_children(node, 0, k),
        }
    }

    /// Same contract, for the union/join of children `from..` of `node`.
    fn extract_children(&mut self, node: NodeId, from: usize, k: usize) {
        let nd = self.tree.node(node);
        let kids = &nd.children;
        if from + 1 == kids.len() {
            return self.extract(kids[from], k);
        }
        let first = kids[from];
        let a1 = self.alpha[first];
        let rest = kids[from + 1..].iter().map(|&c| self.alpha[c]);
        match nd.kind {
            NodeKind::Union => {
                let a2: usize = rest.sum();
                let (k1, k2) = split_integers(a1 as u64, a2 as u64, k as u64)
                    .expect("k within the combined independence number");
                self.extract(first, k1 as usize);
                self.extract_children(node, from + 1, k2 as usize);
            }
            NodeKind::Join => {
                let a2 = rest.max().unwrap_or(0);
                if k <= a1.min(a2) {
                    self.extract(first, k);
                    self.extract_children(node, from + 1, k);
                } else if a1 >= a2 {
                    self.extract(first, k);
                } else {
                    self.extract_children(node, from + 1, k);
                }
            }
            _ => unreachable!("cotrees have no prime nodes"),
        }
    }
}

/// Partition of a cograph into at most ⌊log₂ α⌋ + 1 classes: each round
/// extracts a 1-extendable part with independence number ⌈α/2⌉, leaving a
/// remainder with independence number at most ⌊α/2⌋.
pub fn log_partition_cograph(g: &Graph, t: &MDTree) -> Result<Partition> {
    if !moddecomp::is_cograph(t) {
        return Err(Error::input("log partition needs a cograph"));
    }
    if g.n() != t.vertex_count() {
        return Err(Error::input("tree does not match the graph's vertex count"));
    }
    let mut color = vec![0; g.n()];
    let mut rest: Vec<usize> = (0..g.n()).collect();
    let mut next = 0;
    let mut owned;
    let mut tree = t;
    let mut sub = g.induced_subgraph(&g.vertices())?;
    while !rest.is_empty() {
        let alpha = moddecomp::node_alphas(&sub.graph, tree);
        let k = alpha[tree.root()].div_ceil(2);
        let mut h = Halving { tree, alpha, picked: Vec::new() };
        h.extract(tree.root(), k);
        for &v in &h.picked {
            color[sub.original[v]] = next;
        }
        next += 1;
        let picked: Bits = Bits::from_iter(sub.graph.n(), h.picked.iter().copied());
        rest = (0..sub.graph.n()).filter(|&v| !picked.contains(v)).map(|v| sub.original[v]).collect();
        if rest.is_empty() {
            break;
        }
        sub = g.induced_subgraph(&rest.iter().copied().collect())?;
        owned = moddecomp::decompose(&sub.graph)?;
        tree = &owned;
    }
    Partition::new(next, color)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn paw() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 2)]).unwrap()
    }

    fn holds(a1: u64, a2: u64, k: u64, (k1, k2): (u64, u64)) -> bool {
        let m = |k: u64, a: u64| (k as i64 - 1).max(a as i64 - k as i64);
        k1 <= a1 && k2 <= a2 && k1 + k2 == k && m(k1, a1) + m(k2, a2) <= m(k, a1 + a2)
    }

    #[test]
    fn split_examples() {
        assert_eq!(split_integers(0, 5, 3).unwrap(), (0, 3));
        assert_eq!(split_integers(4, 4, 5).unwrap(), (3, 2));
        assert!(split_integers(2, 2, 5).is_err());
    }

    #[test]
    fn split_exhaustive_small() {
        for a1 in 0..=12 {
            for a2 in 0..=12 {
                for k in 0..=a1 + a2 {
                    let r = split_integers(a1, a2, k).unwrap();
                    assert!(holds(a1, a2, k, r), "{a1} {a2} {k} -> {r:?}");
                }
            }
        }
    }

    #[test]
    fn peel_examples() {
        assert_eq!(peel_partition(&Graph::path(4)).class_count(), 1);
        let p = peel_partition(&paw());
        assert_eq!(p.colors(), &[0, 0, 1, 0]);
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_sqrt_partition(&Graph::empty(9)).class_count(), 1);
        assert_eq!(greedy_sqrt_partition(&Graph::complete(9)).class_count(), 1);
        assert_eq!(greedy_sqrt_partition(&Graph::empty(0)).class_count(), 0);
        assert!(greedy_sqrt_partition(&paw()).class_count() <= 4);
    }

    #[test]
    fn log_partition_examples() {
        let k5 = Graph::complete(5);
        let t = moddecomp::decompose(&k5).unwrap();
        assert_eq!(log_partition_cograph(&k5, &t).unwrap().class_count(), 1);
        for k in 0..=4 {
            let (g, _) = generators::multipartite_extremal(k);
            let t = moddecomp::decompose(&g).unwrap();
            let p = log_partition_cograph(&g, &t).unwrap();
            assert_eq!(p.class_count(), k as usize + 1);
            assert!(super::super::verify_partition(&g, &p).unwrap());
        }
        let g4 = generators::interval_extremal(4).unwrap();
        let t = moddecomp::decompose(&g4).unwrap();
        let p = log_partition_cograph(&g4, &t).unwrap();
        assert!(p.class_count() <= 4);
        assert!(super::super::verify_partition(&g4, &p).unwrap());
        let p4 = Graph::path(4);
        assert!(log_partition_cograph(&p4, &moddecomp::decompose(&p4).unwrap()).is_err());
    }
}
