//! Sets of feasible k-tuples and the two combination rules for disjoint
//! union (componentwise sum) and complete sum (zero-deferring agreement).

use std::collections::HashMap;

use crate::error::{Error, Limits, Result};

/// How a tuple was obtained, enough to rebuild a partition realizing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// No reconstruction data (hand-built sets).
    None,
    /// Single vertex placed in this color.
    Color(usize),
    /// Indices into the left and right operand sets.
    Pair(usize, usize),
    /// One index per child set of a prime node.
    Product(Vec<usize>),
}

/// Deduplicated set of k-tuples, sorted lexicographically, one witness each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibleTupleSet {
    k: usize,
    data: Vec<u32>,
    witness: Vec<Witness>,
}

/// Collects tuples, keeping the first witness seen for each.
pub(crate) struct TupleSetBuilder {
    k: usize,
    seen: HashMap<Vec<u32>, usize>,
    data: Vec<u32>,
    witness: Vec<Witness>,
}

impl TupleSetBuilder {
    pub(crate) fn new(k: usize) -> Self {
        TupleSetBuilder { k, seen: HashMap::new(), data: Vec::new(), witness: Vec::new() }
    }

    pub(crate) fn len(&self) -> usize {
        self.witness.len()
    }

    pub(crate) fn insert(&mut self, tuple: &[u32], witness: impl FnOnce() -> Witness) {
        if !self.seen.contains_key(tuple) {
            self.seen.insert(tuple.to_vec(), self.witness.len());
            self.data.extend_from_slice(tuple);
            self.witness.push(witness());
        }
    }

    pub(crate) fn check(&self, limits: &Limits) -> Result<()> {
        Error::check_budget("feasible tuple count", "dp_tuples", limits.dp_tuples, self.len() as u64)
    }

    pub(crate) fn finish(self) -> FeasibleTupleSet {
        let k = self.k;
        let mut order: Vec<usize> = (0..self.witness.len()).collect();
        order.sort_unstable_by(|&a, &b| self.data[a * k..(a + 1) * k].cmp(&self.data[b * k..(b + 1) * k]));
        let mut data = Vec::with_capacity(self.data.len());
        let mut witness = Vec::with_capacity(order.len());
        let mut old = self.witness;
        for &i in &order {
            data.extend_from_slice(&self.data[i * k..(i + 1) * k]);
            witness.push(std::mem::replace(&mut old[i], Witness::None));
        }
        FeasibleTupleSet { k, data, witness }
    }
}

impl FeasibleTupleSet {
    /// Feasible tuples of a single vertex: one unit vector per color.
    pub fn single_vertex(k: usize) -> Self {
        let mut b = TupleSetBuilder::new(k);
        for i in 0..k {
            let mut t = vec![0; k];
            t[i] = 1;
            b.insert(&t, || Witness::Color(i));
        }
        b.finish()
    }

    /// `{(0, ..., 0)}`, the neutral element of both combination rules.
    pub fn zero(k: usize) -> Self {
        FeasibleTupleSet { k, data: vec![0; k], witness: vec![Witness::None] }
    }

    pub fn from_tuples(k: usize, tuples: impl IntoIterator<Item = Vec<u32>>) -> Result<Self> {
        let mut b = TupleSetBuilder::new(k);
        for t in tuples {
            if t.len() != k {
                return Err(Error::input(format!("tuple of length {} in a {k}-tuple set", t.len())));
            }
            b.insert(&t, || Witness::None);
        }
        Ok(b.finish())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.witness.len()
    }

    pub fn is_empty(&self) -> bool {
        self.witness.is_empty()
    }

    pub fn get(&self, i: usize) -> &[u32] {
        &self.data[i * self.k..(i + 1) * self.k]
    }

    pub fn witness(&self, i: usize) -> &Witness {
        &self.witness[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u32]> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    pub fn contains(&self, tuple: &[u32]) -> bool {
        self.position(tuple).is_some()
    }

    pub fn position(&self, tuple: &[u32]) -> Option<usize> {
        if tuple.len() != self.k {
            return None;
        }
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(tuple) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn to_vecs(&self) -> Vec<Vec<u32>> {
        self.iter().map(<[u32]>::to_vec).collect()
    }

    /// The set up to color permutation: each tuple sorted ascending,
    /// duplicates removed. Enough for the decision question.
    pub fn canonical(&self) -> Vec<Vec<u32>> {
        let mut out: Vec<Vec<u32>> = self
            .iter()
            .map(|t| {
                let mut t = t.to_vec();
                t.sort_unstable();
                t
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

fn check_pair(s1: &FeasibleTupleSet, s2: &FeasibleTupleSet, limits: &Limits) -> Result<()> {
    if s1.k != s2.k {
        return Err(Error::input(format!("tuple sizes differ: {} vs {}", s1.k, s2.k)));
    }
    Error::check_budget("tuple pair count", "dp_work", limits.dp_work, (s1.len() as u64) * (s2.len() as u64))
}

/// Feasible tuples of a disjoint union: all componentwise sums.
pub fn tuple_sum(s1: &FeasibleTupleSet, s2: &FeasibleTupleSet, limits: &Limits) -> Result<FeasibleTupleSet> {
    check_pair(s1, s2, limits)?;
    let k = s1.k;
    let mut b = TupleSetBuilder::new(k);
    let mut buf = vec![0u32; k];
    for i in 0..s1.len() {
        let a = s1.get(i);
        for j in 0..s2.len() {
            for (x, (p, q)) in buf.iter_mut().zip(a.iter().zip(s2.get(j))) {
                *x = p + q;
            }
            b.insert(&buf, || Witness::Pair(i, j));
        }
        b.check(limits)?;
    }
    Ok(b.finish())
}

/// Feasible tuples of a complete sum: per color, both sides agree, or one
/// side is zero (class absent there) and the other value is taken.
pub fn tuple_join(s1: &FeasibleTupleSet, s2: &FeasibleTupleSet, limits: &Limits) -> Result<FeasibleTupleSet> {
    check_pair(s1, s2, limits)?;
    let k = s1.k;
    let mut b = TupleSetBuilder::new(k);
    let mut buf = vec![0u32; k];
    for i in 0..s1.len() {
        let a = s1.get(i);
        'pairs: for j in 0..s2.len() {
            for (x, (&p, &q)) in buf.iter_mut().zip(a.iter().zip(s2.get(j))) {
                *x = match (p, q) {
                    (0, v) | (v, 0) => v,
                    (p, q) if p == q => p,
                    _ => continue 'pairs,
                };
            }
            b.insert(&buf, || Witness::Pair(i, j));
        }
        b.check(limits)?;
    }
    Ok(b.finish())
}
