//! Modular decomposition into strong modules.
//!
//! The tree is built top-down: a vertex set whose induced graph is
//! disconnected splits into its components (union node), one whose complement
//! is disconnected splits into co-components (join node), and otherwise the
//! maximal proper modules partition it (prime node). Those are found by
//! closing `{v, u}` under splitters for every pair. Cubic per level, which is
//! plenty for the graph sizes the exponential algorithms downstream can take.

use std::fmt;
use std::str::FromStr;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::isets;

pub type NodeId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Leaf(usize),
    Union,
    Join,
    /// Quotient graph on the children, vertex `i` standing for child `i`.
    Prime(Graph),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MdNode {
    pub kind: NodeKind,
    /// Ordered by the minimum vertex of each child's module.
    pub children: Vec<NodeId>,
    pub module: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MDTree {
    nodes: Vec<MdNode>,
    root: NodeId,
    n: usize,
}

/// Representative graph with vertex weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    pub base: Graph,
    pub weights: Vec<u64>,
}

impl WeightedGraph {
    pub fn new(base: Graph, weights: Vec<u64>) -> Result<Self> {
        if weights.len() != base.n() {
            return Err(Error::input(format!(
                "{} weights for {} vertices",
                weights.len(),
                base.n()
            )));
        }
        if weights.contains(&0) {
            return Err(Error::input("weights must be positive"));
        }
        Ok(WeightedGraph { base, weights })
    }
}

impl MDTree {
    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn node(&self, id: NodeId) -> &MdNode {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[MdNode] {
        &self.nodes
    }

    /// Number of vertices of the decomposed graph.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Node ids with every child before its parent.
    pub fn postorder(&self) -> Vec<NodeId> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((id, expanded)) = stack.pop() {
            if expanded {
                out.push(id);
            } else {
                stack.push((id, true));
                for &c in self.nodes[id].children.iter().rev() {
                    stack.push((c, false));
                }
            }
        }
        out
    }

    /// Rebuilds the graph by recursive substitution.
    pub fn reconstruct(&self) -> Graph {
        let mut edges = Vec::new();
        for node in &self.nodes {
            let pairs: Vec<(usize, usize)> = match &node.kind {
                NodeKind::Leaf(_) | NodeKind::Union => continue,
                NodeKind::Join => {
                    let m = node.children.len();
                    (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect()
                }
                NodeKind::Prime(h) => h.edges().to_vec(),
            };
            for (i, j) in pairs {
                let a = &self.nodes[node.children[i]].module;
                let b = &self.nodes[node.children[j]].module;
                for x in a.iter() {
                    edges.extend(b.iter().map(|y| (x, y)));
                }
            }
        }
        Graph::from_edges(self.n, edges).expect("tree edges are in range")
    }

    fn push(&mut self, kind: NodeKind, children: Vec<NodeId>, module: VertexSet) -> NodeId {
        self.nodes.push(MdNode { kind, children, module });
        self.nodes.len() - 1
    }

    fn check_structure(&self) -> Result<()> {
        for node in &self.nodes {
            match &node.kind {
                NodeKind::Leaf(_) => {}
                NodeKind::Union | NodeKind::Join if node.children.len() < 2 => {
                    return Err(Error::input("union/join node needs at least two children"));
                }
                NodeKind::Prime(h) if h.n() != node.children.len() || h.n() < 4 => {
                    return Err(Error::input("prime node needs a representative on >= 4 children"));
                }
                _ => {}
            }
        }
        Ok(())
    }
}

struct Builder<'g> {
    g: &'g Graph,
    tree: MDTree,
}

impl Builder<'_> {
    /// Connected components of `G[set]`, or of its complement when `co`.
    fn components(&self, set: &Bits, co: bool) -> Vec<Bits> {
        let n = self.g.n();
        let mut rest = set.clone();
        let mut comps = Vec::new();
        while let Some(s) = rest.first() {
            let mut comp = Bits::empty(n);
            comp.insert(s);
            rest.remove(s);
            let mut frontier = vec![s];
            while let Some(v) = frontier.pop() {
                let reach = if co { rest.and_not(self.g.row(v)) } else { rest.and(self.g.row(v)) };
                for w in reach.iter() {
                    rest.remove(w);
                    comp.insert(w);
                    frontier.push(w);
                }
            }
            comps.push(comp);
        }
        comps
    }

    /// Smallest module of `G[set]` containing `seed`.
    fn closure(&self, set: &Bits, seed: Bits) -> Bits {
        let mut m = seed;
        loop {
            let size = m.len();
            let mut grew = false;
            for w in set.and_not(&m).iter() {
                let seen = self.g.row(w).and_count(&m);
                if seen != 0 && seen != size {
                    m.insert(w);
                    grew = true;
                    break;
                }
            }
            if !grew {
                return m;
            }
        }
    }

    /// Maximal proper modules of `G[set]` when both it and its complement are
    /// connected; these partition `set`.
    fn maximal_modules(&self, set: &Bits) -> Vec<Bits> {
        let n = self.g.n();
        let mut remaining = set.clone();
        let mut parts = Vec::new();
        while let Some(v) = remaining.first() {
            let mut part = Bits::empty(n);
            part.insert(v);
            for u in remaining.iter() {
                if part.contains(u) {
                    continue;
                }
                let m = self.closure(set, Bits::from_iter(n, [v, u]));
                if m != *set {
                    part.union_with(&m);
                }
            }
            remaining = remaining.and_not(&part);
            parts.push(part);
        }
        parts
    }

    fn build(&mut self, set: Bits) -> NodeId {
        let module: VertexSet = set.iter().collect();
        if module.len() == 1 {
            let v = module.as_slice()[0];
            return self.tree.push(NodeKind::Leaf(v), Vec::new(), module);
        }
        let comps = self.components(&set, false);
        if comps.len() > 1 {
            let children = comps.into_iter().map(|c| self.build(c)).collect();
            return self.tree.push(NodeKind::Union, children, module);
        }
        let cocomps = self.components(&set, true);
        if cocomps.len() > 1 {
            let children = cocomps.into_iter().map(|c| self.build(c)).collect();
            return self.tree.push(NodeKind::Join, children, module);
        }
        let parts = self.maximal_modules(&set);
        let reps: Vec<usize> = parts.iter().map(|p| p.first().expect("nonempty")).collect();
        let mut h_edges = Vec::new();
        for i in 0..reps.len() {
            for j in i + 1..reps.len() {
                if self.g.has_edge(reps[i], reps[j]) {
                    h_edges.push((i, j));
                }
            }
        }
        let h = Graph::from_edges(reps.len(), h_edges).expect("quotient edges in range");
        let children = parts.into_iter().map(|p| self.build(p)).collect();
        self.tree.push(NodeKind::Prime(h), children, module)
    }
}

/// Modular decomposition of a nonempty graph.
pub fn decompose(g: &Graph) -> Result<MDTree> {
    if g.n() == 0 {
        return Err(Error::input("cannot decompose the empty graph"));
    }
    let mut b = Builder { g, tree: MDTree { nodes: Vec::new(), root: 0, n: g.n() } };
    let root = b.build(Bits::full(g.n()));
    b.tree.root = root;
    Ok(b.tree)
}

/// Largest prime representative order; 2 for a cograph with at least two
/// vertices and 1 for a single vertex.
pub fn modular_width(t: &MDTree) -> usize {
    let prime = t
        .nodes
        .iter()
        .filter_map(|n| match &n.kind {
            NodeKind::Prime(h) => Some(h.n()),
            _ => None,
        })
        .max()
        .unwrap_or(0);
    if t.n == 1 {
        1
    } else {
        prime.max(2)
    }
}

pub fn is_cograph(t: &MDTree) -> bool {
    t.nodes.iter().all(|n| !matches!(n.kind, NodeKind::Prime(_)))
}

/// α of every node's module: sum at unions, max at joins, exact branch and
/// bound on the induced module at prime nodes.
pub fn node_alphas(g: &Graph, t: &MDTree) -> Vec<usize> {
    let mut alpha = vec![0; t.nodes.len()];
    for id in t.postorder() {
        let node = &t.nodes[id];
        let kids = node.children.iter().map(|&c| alpha[c]);
        alpha[id] = match &node.kind {
            NodeKind::Leaf(_) => 1,
            NodeKind::Union => kids.sum(),
            NodeKind::Join => kids.max().unwrap_or(0),
            NodeKind::Prime(_) => isets::alpha_within(g, &Bits::from_iter(g.n(), node.module.iter())),
        };
    }
    alpha
}

/// The node's quotient graph weighted by α of each child module.
pub fn weighted_representative(g: &Graph, t: &MDTree, node: NodeId) -> Result<WeightedGraph> {
    let nd = &t.nodes[node];
    let m = nd.children.len();
    let base = match &nd.kind {
        NodeKind::Leaf(_) => return Err(Error::input("a leaf has no representative graph")),
        NodeKind::Union => Graph::empty(m),
        NodeKind::Join => Graph::complete(m),
        NodeKind::Prime(h) => h.clone(),
    };
    let alphas = node_alphas(g, t);
    let weights = nd.children.iter().map(|&c| alphas[c] as u64).collect();
    WeightedGraph::new(base, weights)
}

/// Checks that every vertex outside `m` sees all of `m` or none of it.
pub fn verify_module(g: &Graph, m: &VertexSet) -> bool {
    let bits = Bits::from_iter(g.n(), m.iter());
    (0..g.n())
        .filter(|&v| !bits.contains(v))
        .all(|v| {
            let seen = g.row(v).and_count(&bits);
            seen == 0 || seen == m.len()
        })
}

impl fmt::Display for MDTree {
    /// Nested-list form, e.g. `join(union(leaf 0,leaf 1),leaf 2)`. Prime nodes
    /// list their quotient edges by child position: `prime[0-1 1-2 2-3](...)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(t: &MDTree, id: NodeId, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            let node = &t.nodes[id];
            match &node.kind {
                NodeKind::Leaf(v) => return write!(f, "leaf {v}"),
                NodeKind::Union => write!(f, "union(")?,
                NodeKind::Join => write!(f, "join(")?,
                NodeKind::Prime(h) => {
                    write!(f, "prime[")?;
                    for (i, (a, b)) in h.edges().iter().enumerate() {
                        if i > 0 {
                            write!(f, " ")?;
                        }
                        write!(f, "{a}-{b}")?;
                    }
                    write!(f, "](")?;
                }
            }
            for (i, &c) in node.children.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                go(t, c, f)?;
            }
            write!(f, ")")
        }
        go(self, self.root, f)
    }
}

struct TreeParser<'s> {
    src: &'s [u8],
    pos: usize,
    tree: MDTree,
}

impl TreeParser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::input(format!("tree text, offset {}: {msg}", self.pos)))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok.as_bytes()) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            self.err(&format!("expected `{tok}`"))
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .or_else(|_| self.err("number out of range"))
    }

    fn node(&mut self) -> Result<NodeId> {
        if self.eat("leaf") {
            let v = self.number()?;
            return Ok(self.tree.push(NodeKind::Leaf(v), Vec::new(), VertexSet::from_iter([v])));
        }
        let mut prime_edges = None;
        let kind = if self.eat("union") {
            NodeKind::Union
        } else if self.eat("join") {
            NodeKind::Join
        } else if self.eat("prime") {
            self.expect("[")?;
            let mut edges = Vec::new();
            while !self.eat("]") {
                let a = self.number()?;
                self.expect("-")?;
                let b = self.number()?;
                edges.push((a, b));
            }
            prime_edges = Some(edges);
            NodeKind::Union
        } else {
            return self.err("expected `leaf`, `union`, `join` or `prime`");
        };
        self.expect("(")?;
        let mut children = vec![self.node()?];
        while self.eat(",") {
            children.push(self.node()?);
        }
        self.expect(")")?;
        let kind = match prime_edges {
            Some(edges) => NodeKind::Prime(Graph::from_edges(children.len(), edges)?),
            None => kind,
        };
        let module = children.iter().flat_map(|&c| self.tree.nodes[c].module.iter()).collect();
        Ok(self.tree.push(kind, children, module))
    }
}

impl FromStr for MDTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<MDTree> {
        let mut p = TreeParser {
            src: s.as_bytes(),
            pos: 0,
            tree: MDTree { nodes: Vec::new(), root: 0, n: 0 },
        };
        let root = p.node()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return p.err("trailing input");
        }
        let mut tree = p.tree;
        tree.root = root;
        let leaves: Vec<usize> = tree
            .nodes
            .iter()
            .filter_map(|n| match n.kind {
                NodeKind::Leaf(v) => Some(v),
                _ => None,
            })
            .collect();
        tree.n = leaves.len();
        if tree.nodes[root].module.as_slice() != (0..tree.n).collect::<Vec<_>>() {
            return Err(Error::input("tree leaves must be exactly 0..n, each once"));
        }
        tree.check_structure()?;
        Ok(tree)
    }
}
