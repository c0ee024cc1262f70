//! Graph families used as extremal examples and reduction gadgets.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Complete multipartite graph with parts of sizes `1, 2, 4, ..., 2^k`.
/// It has `2^(k+1) - 1` vertices and needs exactly `k + 1` classes.
pub fn multipartite_extremal(k: u32) -> (Graph, Vec<VertexSet>) {
    let sizes: Vec<usize> = (0..=k).map(|i| 1usize << i).collect();
    Graph::complete_multipartite(&sizes).expect("sizes are positive")
}

/// `G_1 = K1`, `G_{k+1} = K1 + (G_k ∪ G_k)`. The apex of each level is
/// vertex 0 of that level's block.
pub fn interval_extremal(k: u32) -> Result<Graph> {
    if k == 0 {
        return Err(Error::input("interval family starts at k = 1"));
    }
    let k1 = Graph::complete(1);
    let mut g = k1.clone();
    for _ in 1..k {
        g = k1.complete_sum(&g.disjoint_union(&g));
    }
    Ok(g)
}

/// `g + I_{k·n + 1}`: joins `g` with a fresh independent set large enough that
/// a `k`-partition of the result leaves one class entirely inside it.
pub fn hardness_gadget(g: &Graph, k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::input("hardness gadget needs k >= 2"));
    }
    Ok(g.complete_sum(&Graph::empty(k * g.n() + 1)))
}
