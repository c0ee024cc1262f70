//! Generating Set: the arithmetic form of 1-extendable partitioning on
//! complete multipartite graphs.
//!
//! A set of generators `a_1..a_k` solves an instance when every target is the
//! sum of some subset of the generators. Each generator becomes a color class
//! taking `a_j` vertices from every part whose subset uses `j`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Limits, Result};
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSetInstance {
    targets: Vec<u64>,
    k: usize,
}

impl GenSetInstance {
    pub fn new(targets: Vec<u64>, k: usize) -> Result<Self> {
        if targets.is_empty() {
            return Err(Error::input("no targets"));
        }
        if targets.contains(&0) {
            return Err(Error::input("targets must be positive"));
        }
        if k == 0 {
            return Err(Error::input("k must be at least 1"));
        }
        Ok(GenSetInstance { targets, k })
    }

    pub fn targets(&self) -> &[u64] {
        &self.targets
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn alpha_max(&self) -> u64 {
        self.targets.iter().copied().max().unwrap_or(0)
    }
}

impl fmt::Display for GenSetInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "targets:")?;
        for t in &self.targets {
            write!(f, " {t}")?;
        }
        writeln!(f)?;
        writeln!(f, "k: {}", self.k)
    }
}

impl FromStr for GenSetInstance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut targets = None;
        let mut k = None;
        for (no, line) in s.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = || Error::input(format!("line {}: expected `targets: ...` or `k: ...`", no + 1));
            let (key, rest) = line.split_once(':').ok_or_else(bad)?;
            let num = |w: &str| {
                w.parse::<u64>()
                    .map_err(|_| Error::input(format!("line {}: bad integer `{w}`", no + 1)))
            };
            match key.trim() {
                "targets" => targets = Some(rest.split_whitespace().map(num).collect::<Result<Vec<_>>>()?),
                "k" => k = Some(num(rest.trim())?),
                _ => return Err(bad()),
            }
        }
        let targets = targets.ok_or_else(|| Error::input("missing `targets:` line"))?;
        let k = k.ok_or_else(|| Error::input("missing `k:` line"))?;
        GenSetInstance::new(targets, usize::try_from(k).map_err(|_| Error::input("k too large"))?)
    }
}

/// Generators (nondecreasing, zeros allowed) with one index subset per target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSetSolution {
    pub generators: Vec<u64>,
    /// `subsets[i]` lists generator indices summing to target `i`.
    pub subsets: Vec<Vec<usize>>,
}

impl GenSetSolution {
    /// Finds subset witnesses for `targets` over `generators`, if all exist.
    pub fn derive(targets: &[u64], generators: Vec<u64>) -> Option<Self> {
        let reach = reach_table(&generators, targets.iter().copied().max().unwrap_or(0));
        let subsets = targets
            .iter()
            .map(|&t| backtrack(&reach, &generators, t))
            .collect::<Option<Vec<_>>>()?;
        Some(GenSetSolution { generators, subsets })
    }

    /// True iff every subset has distinct valid indices and sums to its target.
    pub fn is_valid_for(&self, targets: &[u64]) -> bool {
        self.subsets.len() == targets.len()
            && self.subsets.iter().zip(targets).all(|(sub, &t)| {
                let mut seen = vec![false; self.generators.len()];
                let mut sum = 0u64;
                for &j in sub {
                    if j >= seen.len() || seen[j] {
                        return false;
                    }
                    seen[j] = true;
                    sum = sum.saturating_add(self.generators[j]);
                }
                sum == t
            })
    }
}

/// `reach[j]` = sums reachable with the first `j` generators, capped at `cap`.
fn reach_table(generators: &[u64], cap: u64) -> Vec<Vec<bool>> {
    let cap = cap as usize;
    let mut reach = vec![vec![false; cap + 1]];
    reach[0][0] = true;
    for &a in generators {
        let prev = reach.last().expect("nonempty");
        let mut next = prev.clone();
        let a = a as usize;
        if a <= cap {
            for s in a..=cap {
                next[s] |= prev[s - a];
            }
        }
        reach.push(next);
    }
    reach
}

fn backtrack(reach: &[Vec<bool>], generators: &[u64], target: u64) -> Option<Vec<usize>> {
    let mut s = target as usize;
    if !reach.last()?.get(s).copied().unwrap_or(false) {
        return None;
    }
    let mut subset = Vec::new();
    for j in (0..generators.len()).rev() {
        if !reach[j][s] {
            subset.push(j);
            s -= generators[j] as usize;
        }
    }
    subset.reverse();
    Some(subset)
}

fn binomial_capped(n: u64, r: u64, cap: u64) -> u64 {
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > cap as u128 {
            return cap.saturating_add(1);
        }
    }
    acc as u64
}

struct Search<'a> {
    targets: &'a [u64],
    words: usize,
    tuple: Vec<u64>,
}

impl Search<'_> {
    /// Extends the nondecreasing prefix `tuple` from `lo`; `reach` is the
    /// bitset of sums reachable by the prefix.
    fn go(&mut self, k: usize, lo: u64, reach: &[u64], alpha: u64) -> bool {
        if self.tuple.len() == k {
            return self.targets.iter().all(|&t| reach[t as usize / 64] >> (t % 64) & 1 == 1);
        }
        for a in lo..=alpha {
            let mut next = reach.to_vec();
            shift_or(&mut next, reach, a as usize, self.words);
            self.tuple.push(a);
            if self.go(k, a, &next, alpha) {
                return true;
            }
            self.tuple.pop();
        }
        false
    }
}

fn shift_or(dst: &mut [u64], src: &[u64], shift: usize, words: usize) {
    let (ws, bs) = (shift / 64, shift % 64);
    for i in (ws..words).rev() {
        let mut v = src[i - ws] << bs;
        if bs > 0 && i > ws {
            v |= src[i - ws - 1] >> (64 - bs);
        }
        dst[i] |= v;
    }
}

/// First nondecreasing generator tuple in `{0..α}^k` (lexicographic order)
/// that generates every target, with subset witnesses.
///
/// When the enumeration would exceed the candidate budget but `k` is at
/// least the binary bound, the powers-of-two solution is returned instead.
pub fn solve(inst: &GenSetInstance, limits: &Limits) -> Result<Option<GenSetSolution>> {
    let alpha = inst.alpha_max();
    let k = inst.k as u64;
    let candidates = binomial_capped(alpha + k, k, limits.genset_candidates);
    let binary = binary_solution(alpha);
    if candidates > limits.genset_candidates {
        if inst.k >= binary.len() {
            let mut gens = vec![0; inst.k - binary.len()];
            gens.extend(binary);
            return Ok(GenSetSolution::derive(&inst.targets, gens));
        }
        Error::check_budget("generator enumeration", "genset_candidates", limits.genset_candidates, candidates)?;
    }
    let words = alpha as usize / 64 + 1;
    let mut reach = vec![0u64; words];
    reach[0] = 1;
    let mut search = Search { targets: &inst.targets, words, tuple: Vec::with_capacity(inst.k) };
    if !search.go(inst.k, 0, &reach, alpha) {
        return Ok(None);
    }
    let sol = GenSetSolution::derive(&inst.targets, search.tuple).expect("search checked reachability");
    debug_assert!(sol.is_valid_for(&inst.targets));
    Ok(Some(sol))
}

/// Powers of two `1, 2, ..., 2^⌈log₂ α⌉`; generates every integer in `1..=α`.
pub fn binary_solution(alpha: u64) -> Vec<u64> {
    let alpha = alpha.max(1);
    let e = u64::BITS - (alpha - 1).leading_zeros();
    (0..=e).map(|i| 1u64 << i).collect()
}

pub fn to_instance(sizes: &[usize], k: usize) -> Result<GenSetInstance> {
    GenSetInstance::new(sizes.iter().map(|&s| s as u64).collect(), k)
}

/// Partition of `complete_multipartite(sizes)` realizing `sol`: nonzero
/// generator `j` becomes a color taking `a_j` vertices from each part whose
/// subset contains `j`. Zero generators are dropped.
pub fn from_solution(sizes: &[usize], sol: &GenSetSolution) -> Result<Partition> {
    let targets: Vec<u64> = sizes.iter().map(|&s| s as u64).collect();
    if !sol.is_valid_for(&targets) {
        return Err(Error::input("solution does not generate the part sizes"));
    }
    let mut color_of_gen = vec![usize::MAX; sol.generators.len()];
    let mut k = 0;
    for (j, &a) in sol.generators.iter().enumerate() {
        if a > 0 {
            color_of_gen[j] = k;
            k += 1;
        }
    }
    let mut color = Vec::with_capacity(sizes.iter().sum());
    for sub in &sol.subsets {
        for &j in sub {
            if sol.generators[j] > 0 {
                color.extend(std::iter::repeat_n(color_of_gen[j], sol.generators[j] as usize));
            }
        }
    }
    Partition::new(k, color)
}
