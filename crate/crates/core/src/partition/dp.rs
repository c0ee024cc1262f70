//! Feasible-tuple dynamic program over the modular decomposition.

use std::collections::HashMap;

use super::tuples::{tuple_join, tuple_sum, FeasibleTupleSet, TupleSetBuilder, Witness};
use super::Partition;
use crate::error::{Error, Limits, Result};
use crate::graph::Graph;
use crate::isets::weighted_scan;
use crate::moddecomp::{MDTree, NodeId, NodeKind};

enum Table {
    /// Single set: leaves and prime nodes.
    Direct(FeasibleTupleSet),
    /// Left fold over a union/join node's children; `steps[j - 1]` combines
    /// the fold of children `0..j` with child `j`.
    Fold(Vec<FeasibleTupleSet>),
}

/// Per-node feasible-tuple sets for one fixed `k`, kept so that any root
/// tuple can be turned back into a partition.
pub struct TupleDp<'t> {
    tree: &'t MDTree,
    k: usize,
    tables: Vec<Option<Table>>,
}

impl<'t> TupleDp<'t> {
    fn set(&self, id: NodeId) -> &FeasibleTupleSet {
        match self.tables[id].as_ref().expect("child computed first") {
            Table::Direct(s) => s,
            Table::Fold(steps) => steps.last().expect("at least two children"),
        }
    }

    fn run(g: Option<&Graph>, tree: &'t MDTree, k: usize, limits: &Limits) -> Result<Self> {
        if k == 0 {
            return Err(Error::input("k must be at least 1"));
        }
        if let Some(g) = g {
            if g.n() != tree.vertex_count() {
                return Err(Error::input("tree does not match the graph's vertex count"));
            }
        }
        let mut dp = TupleDp { tree, k, tables: (0..tree.nodes().len()).map(|_| None).collect() };
        for id in tree.postorder() {
            let node = tree.node(id);
            let table = match &node.kind {
                NodeKind::Leaf(_) => Table::Direct(FeasibleTupleSet::single_vertex(k)),
                NodeKind::Union | NodeKind::Join => {
                    let op = if node.kind == NodeKind::Union { tuple_sum } else { tuple_join };
                    let mut steps: Vec<FeasibleTupleSet> = Vec::with_capacity(node.children.len() - 1);
                    for &c in &node.children[1..] {
                        let acc = steps.last().unwrap_or_else(|| dp.set(node.children[0]));
                        let next = op(acc, dp.set(c), limits)?;
                        steps.push(next);
                    }
                    Table::Fold(steps)
                }
                NodeKind::Prime(h) => {
                    if g.is_none() {
                        return Err(Error::input(
                            "tree has a prime node; use the modular-width variant",
                        ));
                    }
                    let kids: Vec<&FeasibleTupleSet> = node.children.iter().map(|&c| dp.set(c)).collect();
                    Table::Direct(prime_tuples(h, &kids, k, limits)?)
                }
            };
            dp.tables[id] = Some(table);
        }
        Ok(dp)
    }

    /// DP on a cotree; fails on prime nodes.
    pub fn cograph(tree: &'t MDTree, k: usize, limits: &Limits) -> Result<Self> {
        Self::run(None, tree, k, limits)
    }

    /// DP on an arbitrary decomposition of `g`.
    pub fn modular(g: &Graph, tree: &'t MDTree, k: usize, limits: &Limits) -> Result<Self> {
        Self::run(Some(g), tree, k, limits)
    }

    pub fn root_set(&self) -> &FeasibleTupleSet {
        self.set(self.tree.root())
    }

    pub fn into_root_set(mut self) -> FeasibleTupleSet {
        match self.tables[self.tree.root()].take().expect("computed") {
            Table::Direct(s) => s,
            Table::Fold(mut steps) => steps.pop().expect("nonempty fold"),
        }
    }

    /// A partition whose class `i` has independence number `tuple[i]`, for
    /// the root tuple at `index`.
    pub fn reconstruct(&self, index: usize) -> Partition {
        let mut color = vec![usize::MAX; self.tree.vertex_count()];
        let mut stack = vec![(self.tree.root(), index)];
        while let Some((id, idx)) = stack.pop() {
            let node = self.tree.node(id);
            match self.tables[id].as_ref().expect("computed") {
                Table::Direct(s) => match (s.witness(idx), &node.kind) {
                    (Witness::Color(c), NodeKind::Leaf(v)) => color[*v] = *c,
                    (Witness::Product(idxs), _) => {
                        stack.extend(node.children.iter().copied().zip(idxs.iter().copied()))
                    }
                    _ => unreachable!("witness shape matches node kind"),
                },
                Table::Fold(steps) => {
                    let mut cur = idx;
                    for j in (1..node.children.len()).rev() {
                        let Witness::Pair(a, b) = *steps[j - 1].witness(cur) else {
                            unreachable!("fold steps carry pair witnesses")
                        };
                        stack.push((node.children[j], b));
                        cur = a;
                    }
                    stack.push((node.children[0], cur));
                }
            }
        }
        Partition::new(self.k, color).expect("every leaf colored within range")
    }
}

/// Prime node: for every choice of one tuple per child and every color,
/// the quotient restricted to children with a nonzero entry, weighted by
/// those entries, must be weighted 1-extendable; its weighted α becomes the
/// color's entry.
const CACHE_CAP: usize = 1 << 18;

fn prime_tuples(
    h: &Graph,
    kids: &[&FeasibleTupleSet],
    k: usize,
    limits: &Limits,
) -> Result<FeasibleTupleSet> {
    let m = h.n();
    Error::check_budget(
        "prime representative order",
        "weighted_vertices",
        limits.weighted_vertices.min(32) as u64,
        m as u64,
    )?;
    let combos = kids
        .iter()
        .try_fold(1u64, |acc, s| acc.checked_mul(s.len() as u64))
        .unwrap_or(u64::MAX);
    Error::check_budget("prime child-tuple product", "prime_products", limits.prime_products, combos)?;
    let mut b = TupleSetBuilder::new(k);
    if combos == 0 {
        return Ok(b.finish());
    }
    let rows: Vec<u32> =
        (0..m).map(|v| h.neighbors(v).iter().fold(0u32, |acc, &u| acc | 1 << u)).collect();
    // weights (zeros = absent) -> weighted α if 1-extendable
    let mut cache: HashMap<Vec<u64>, Option<u32>> = HashMap::new();
    let mut idx = vec![0usize; m];
    let mut weights = vec![0u64; m];
    let mut out = vec![0u32; k];
    'combos: loop {
        let mut feasible = true;
        for (color, slot) in out.iter_mut().enumerate() {
            let mut within = 0u32;
            for (t, w) in weights.iter_mut().enumerate() {
                *w = kids[t].get(idx[t])[color] as u64;
                if *w > 0 {
                    within |= 1 << t;
                }
            }
            let res = match cache.get(&weights) {
                Some(r) => *r,
                None => {
                    let (alpha, cover) = weighted_scan(&rows, &weights, within);
                    let r = (cover == within).then_some(alpha as u32);
                    if cache.len() >= CACHE_CAP {
                        cache.clear();
                    }
                    cache.insert(weights.clone(), r);
                    r
                }
            };
            match res {
                Some(a) => *slot = a,
                None => {
                    feasible = false;
                    break;
                }
            }
        }
        if feasible {
            b.insert(&out, || Witness::Product(idx.clone()));
        }
        // advance the mixed-radix counter
        let mut t = 0;
        loop {
            if t == m {
                break 'combos;
            }
            idx[t] += 1;
            if idx[t] < kids[t].len() {
                break;
            }
            idx[t] = 0;
            t += 1;
        }
        if t > 0 {
            b.check(limits)?;
        }
    }
    Ok(b.finish())
}

/// Feasible k-tuples of a cograph from its cotree.
pub fn feasible_tuples_cograph(t: &MDTree, k: usize, limits: &Limits) -> Result<FeasibleTupleSet> {
    Ok(TupleDp::cograph(t, k, limits)?.into_root_set())
}

/// Feasible k-tuples of `g` from any modular decomposition of it.
pub fn feasible_tuples_mw(g: &Graph, t: &MDTree, k: usize, limits: &Limits) -> Result<FeasibleTupleSet> {
    Ok(TupleDp::modular(g, t, k, limits)?.into_root_set())
}

/// A 1-extendable partition with at most `k` classes, if one exists.
pub fn partition_at_most(g: &Graph, t: &MDTree, k: usize, limits: &Limits) -> Result<Option<Partition>> {
    let dp = TupleDp::modular(g, t, k, limits)?;
    Ok((!dp.root_set().is_empty()).then(|| dp.reconstruct(0)))
}
