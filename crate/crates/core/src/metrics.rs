//! CSMA access proportions. Under saturation a vertex's share of channel
//! accesses is the θ^|S|-weighted fraction of independent sets S containing
//! it; as θ grows this tends to the fraction of maximum independent sets
//! containing it.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::bits::Bits;
use crate::error::{Error, Limits, Result};
use crate::graph::{Graph, VertexSet};
use crate::isets;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AccessProfile {
    pub theta: BigRational,
    pub p: Vec<BigRational>,
    /// θ → ∞ limit, #_vα / #α.
    pub limit_p: Vec<BigRational>,
    /// Vertices whose limit is zero.
    pub starved: VertexSet,
}

/// Independent-set counts by size: `total[s]` and `per_vertex[v][s]`. The
/// empty set is included.
struct SizeCounts {
    total: Vec<u128>,
    per_vertex: Vec<Vec<u128>>,
}

fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn count_by_size(g: &Graph) -> SizeCounts {
    fn rec(g: &Graph, cand: Bits, chosen: &mut Vec<usize>, out: &mut SizeCounts) {
        let (mut pick, mut deg) = (usize::MAX, 0);
        for v in cand.iter() {
            let d = g.row(v).and_count(&cand);
            if pick == usize::MAX || d > deg {
                (pick, deg) = (v, d);
            }
        }
        if deg == 0 {
            let c = cand.len();
            let base = chosen.len();
            for r in 0..=c {
                let all = binom(c, r);
                out.total[base + r] += all;
                for &u in chosen.iter() {
                    out.per_vertex[u][base + r] += all;
                }
                if r > 0 {
                    let with_one = binom(c - 1, r - 1);
                    for u in cand.iter() {
                        out.per_vertex[u][base + r] += with_one;
                    }
                }
            }
            return;
        }
        chosen.push(pick);
        let mut with_v = cand.and_not(g.row(pick));
        with_v.remove(pick);
        rec(g, with_v, chosen, out);
        chosen.pop();
        let mut without_v = cand;
        without_v.remove(pick);
        rec(g, without_v, chosen, out);
    }
    let n = g.n();
    let mut out = SizeCounts { total: vec![0; n + 1], per_vertex: vec![vec![0; n + 1]; n] };
    rec(g, Bits::full(n), &mut Vec::new(), &mut out);
    out
}

fn poly_at(coeffs: &[u128], theta: &BigRational) -> BigRational {
    // Horner, highest degree first
    coeffs.iter().rev().fold(BigRational::zero(), |acc, &c| {
        acc * theta + BigRational::from_integer(BigInt::from(c))
    })
}

fn ratio(num: &BigUint, den: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

/// Exact per-vertex access proportions at the given θ, plus their limits.
pub fn access_proportion(g: &Graph, theta: &BigRational, limits: &Limits) -> Result<AccessProfile> {
    if !theta.is_positive() {
        return Err(Error::input(format!("theta must be positive, got {theta}")));
    }
    Error::check_budget(
        "vertex count for independent-set sums",
        "all_sets_vertices",
        limits.all_sets_vertices.min(120) as u64,
        g.n() as u64,
    )?;
    let counts = count_by_size(g);
    let den = poly_at(&counts.total, theta);
    let p = counts.per_vertex.iter().map(|c| poly_at(c, theta) / &den).collect();
    let stats = isets::mis_stats(g, limits)?;
    let limit_p: Vec<BigRational> =
        stats.per_vertex_mis_count.iter().map(|c| ratio(c, &stats.total_mis_count)).collect();
    let starved = (0..g.n()).filter(|&v| limit_p[v].is_zero()).collect();
    Ok(AccessProfile { theta: theta.clone(), p, limit_p, starved })
}

/// Vertices in no maximum independent set; empty iff the graph is
/// 1-extendable.
pub fn starvation_set(g: &Graph) -> VertexSet {
    let cover = isets::mis_cover(g);
    (0..g.n()).filter(|&v| !cover.contains(v)).collect()
}

/// Parses `7`, `3/2` or `0.25` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::input(format!("not a rational number: `{s}`"));
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let a: BigInt = a.trim().parse().map_err(|_| bad())?;
        let b: BigInt = b.trim().parse().map_err(|_| bad())?;
        if b.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(a, b));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = int.starts_with('-');
        let int: BigInt = if int.is_empty() || int == "-" { BigInt::zero() } else { int.parse().map_err(|_| bad())? };
        let scale = num_traits::pow(BigInt::from(10u32), frac.len());
        let frac: BigInt = frac.parse().map_err(|_| bad())?;
        let mag = int.abs() * &scale + frac;
        let num = if neg { -mag } else { mag };
        return Ok(BigRational::new(num, scale));
    }
    let v: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(v))
}

/// Lossy conversion for display.
pub fn to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}
