//! 1-extendability tests that walk the modular decomposition instead of
//! calling the exponential oracle on the whole graph.

use crate::error::{Error, Limits, Result};
use crate::graph::Graph;
use crate::isets::{self, full_mask, weighted_scan};
use crate::moddecomp::{MDTree, NodeKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtReport {
    pub is_1ext: bool,
    pub alpha: usize,
    /// A vertex in no maximum independent set. Only the oracle path fills it.
    pub witness_failure: Option<usize>,
}

/// Union: all parts 1-extendable, α adds up. Join: additionally every part
/// has the same α, and α is their max.
fn combine(kind: &NodeKind, kids: &[(bool, usize)]) -> (bool, usize) {
    let ok = kids.iter().all(|k| k.0);
    match kind {
        NodeKind::Union => (ok, kids.iter().map(|k| k.1).sum()),
        NodeKind::Join => {
            let max = kids.iter().map(|k| k.1).max().unwrap_or(0);
            (ok && kids.iter().all(|k| k.1 == max), max)
        }
        _ => unreachable!("only union/join combine structurally"),
    }
}

/// Linear-time test on a cotree.
pub fn is_1ext_cograph(t: &MDTree) -> Result<ExtReport> {
    let mut res = vec![(true, 0usize); t.nodes().len()];
    for id in t.postorder() {
        let node = t.node(id);
        res[id] = match &node.kind {
            NodeKind::Leaf(_) => (true, 1),
            NodeKind::Prime(_) => {
                return Err(Error::input(
                    "tree has a prime node; use the modular-width test instead",
                ))
            }
            kind => {
                let kids: Vec<_> = node.children.iter().map(|&c| res[c]).collect();
                combine(kind, &kids)
            }
        };
    }
    let (is_1ext, alpha) = res[t.root()];
    Ok(ExtReport { is_1ext, alpha, witness_failure: None })
}

/// Test over an arbitrary decomposition: at a prime node, the children must
/// be 1-extendable and the quotient weighted by child α must have every
/// vertex in a maximum-weight independent set.
pub fn is_1ext_mw(g: &Graph, t: &MDTree, limits: &Limits) -> Result<ExtReport> {
    if g.n() != t.vertex_count() {
        return Err(Error::input("tree does not match the graph's vertex count"));
    }
    let mut res = vec![(true, 0usize); t.nodes().len()];
    for id in t.postorder() {
        let node = t.node(id);
        let kids: Vec<_> = node.children.iter().map(|&c| res[c]).collect();
        res[id] = match &node.kind {
            NodeKind::Leaf(_) => (true, 1),
            NodeKind::Prime(h) => {
                Error::check_budget(
                    "prime representative order",
                    "weighted_vertices",
                    limits.weighted_vertices.min(32) as u64,
                    h.n() as u64,
                )?;
                let rows: Vec<u32> = (0..h.n())
                    .map(|v| h.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
                    .collect();
                let weights: Vec<u64> = kids.iter().map(|k| k.1 as u64).collect();
                let (alpha, cover) = weighted_scan(&rows, &weights, full_mask(h.n()));
                let all = cover.count_ones() as usize == h.n();
                (all && kids.iter().all(|k| k.0), alpha as usize)
            }
            kind => combine(kind, &kids),
        };
    }
    let (is_1ext, alpha) = res[t.root()];
    Ok(ExtReport { is_1ext, alpha, witness_failure: None })
}

/// Oracle-backed report, with a starved vertex when the answer is negative.
pub fn ext_report_oracle(g: &Graph) -> ExtReport {
    let witness_failure = isets::starved_vertex(g);
    ExtReport { is_1ext: witness_failure.is_none(), alpha: isets::alpha(g), witness_failure }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::moddecomp::decompose;

    fn paw() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 2)]).unwrap()
    }

    fn mw(g: &Graph) -> ExtReport {
        is_1ext_mw(g, &decompose(g).unwrap(), &Limits::default()).unwrap()
    }

    #[test]
    fn cograph_examples() {
        let (bal, _) = Graph::complete_multipartite(&[3, 3, 3]).unwrap();
        let r = is_1ext_cograph(&decompose(&bal).unwrap()).unwrap();
        assert_eq!((r.is_1ext, r.alpha), (true, 3));
        let (unbal, _) = Graph::complete_multipartite(&[2, 3]).unwrap();
        assert!(!is_1ext_cograph(&decompose(&unbal).unwrap()).unwrap().is_1ext);
        let g3 = generators::interval_extremal(3).unwrap();
        let r = is_1ext_cograph(&decompose(&g3).unwrap()).unwrap();
        assert_eq!((r.is_1ext, r.alpha), (false, 4));
        assert!(!isets::is_1ext_oracle(&g3));
        assert!(is_1ext_cograph(&decompose(&Graph::path(4)).unwrap()).is_err());
    }

    #[test]
    fn mw_examples() {
        assert_eq!(mw(&Graph::path(4)), ExtReport { is_1ext: true, alpha: 2, witness_failure: None });
        let r = mw(&paw());
        assert_eq!((r.is_1ext, r.alpha), (false, 2));
        let k1 = Graph::complete(1);
        let (c5, _) = Graph::substitute(&Graph::cycle(5), &vec![k1; 5]).unwrap();
        assert_eq!(c5, Graph::cycle(5));
        assert!(mw(&c5).is_1ext);
    }

    #[test]
    fn oracle_report_has_witness() {
        let r = ext_report_oracle(&paw());
        assert_eq!(r, ExtReport { is_1ext: false, alpha: 2, witness_failure: Some(2) });
        assert_eq!(ext_report_oracle(&Graph::path(4)).witness_failure, None);
    }

    #[test]
    fn prime_cap() {
        let g = Graph::cycle(7);
        let t = decompose(&g).unwrap();
        let tight = Limits { weighted_vertices: 6, ..Limits::default() };
        assert!(matches!(is_1ext_mw(&g, &t, &tight), Err(Error::Budget { .. })));
    }
}
