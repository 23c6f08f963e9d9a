//! Exact betweenness centrality over the rationals.
//!
//! [`betweenness_exact`] runs BFS-DAG dependency accumulation with
//! arbitrary-precision path counts, so uniformity checks are exact equality.
//! [`betweenness_oracle`] recomputes the same values by explicitly walking
//! every shortest path; it shares no accumulation logic with the fast path
//! and serves as an independent cross-check.
//!
//! Pairs are unordered: each `{v, w}` counts once, and endpoints are never
//! internal vertices of their own pairs.

use num::bigint::BigInt;
use num::BigUint;
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::Graph;
use crate::rational::Rat;

/// Size cap for the path-enumeration oracle.
pub const MAX_ORACLE_VERTICES: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CentralityError {
    #[error("betweenness requires a connected graph")]
    Disconnected,
    #[error("path-enumeration oracle supports up to {MAX_ORACLE_VERTICES} vertices (got {0})")]
    OracleCap(usize),
}

/// Per-vertex exact betweenness plus the graph average.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetweennessProfile {
    pub per_vertex: Vec<Rat>,
    pub average: Rat,
    pub is_uniform: bool,
}

impl BetweennessProfile {
    fn from_scores(per_vertex: Vec<Rat>) -> Self {
        let n = per_vertex.len();
        let sum: Rat = per_vertex.iter().cloned().sum();
        let average = if n == 0 { Rat::zero() } else { sum / Rat::from(n) };
        let is_uniform = per_vertex.windows(2).all(|w| w[0] == w[1]);
        BetweennessProfile { per_vertex, average, is_uniform }
    }

    /// The common value, when uniform.
    pub fn uniform_value(&self) -> Option<Rat> {
        self.is_uniform.then(|| self.average.clone())
    }
}

fn rat_from_count(count: &BigUint) -> Rat {
    Rat::ratio_big(BigInt::from(count.clone()), BigInt::from(1))
}

/// Dependency accumulation for a single BFS source. Returns the ordered-pair
/// contribution of `src` to every other vertex's betweenness.
fn accumulate_source(g: &Graph, src: usize) -> Vec<Rat> {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut sigma = vec![BigUint::from(0u32); n];
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);
    let mut queue = std::collections::VecDeque::from([src]);
    dist[src] = 0;
    sigma[src] = BigUint::from(1u32);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
            if dist[w] == dist[v] + 1 {
                let add = sigma[v].clone();
                sigma[w] += add;
                preds[w].push(v);
            }
        }
    }
    let mut delta = vec![Rat::zero(); n];
    let mut scores = vec![Rat::zero(); n];
    for &w in order.iter().rev() {
        if !preds[w].is_empty() {
            // delta[v] += sigma[v]/sigma[w] * (1 + delta[w]) for each predecessor.
            let factor = (Rat::one() + &delta[w]) / rat_from_count(&sigma[w]);
            for &v in &preds[w] {
                let add = rat_from_count(&sigma[v]) * &factor;
                delta[v] += add;
            }
        }
        if w != src {
            scores[w] += &delta[w];
        }
    }
    scores
}

/// Exact betweenness of every vertex of a connected graph.
pub fn betweenness_exact(g: &Graph) -> Result<BetweennessProfile, CentralityError> {
    if !g.is_connected() {
        return Err(CentralityError::Disconnected);
    }
    let n = g.vertex_count();
    let per_source: Vec<Vec<Rat>> =
        (0..n).into_par_iter().map(|s| accumulate_source(g, s)).collect();
    let mut totals = vec![Rat::zero(); n];
    for scores in per_source {
        for (t, s) in totals.iter_mut().zip(scores) {
            *t += s;
        }
    }
    // Each unordered pair was counted from both endpoints.
    let half = Rat::ratio(1, 2);
    let per_vertex: Vec<Rat> = totals.into_iter().map(|t| t * &half).collect();
    Ok(BetweennessProfile::from_scores(per_vertex))
}

/// Betweenness by explicit enumeration of every shortest path.
pub fn betweenness_oracle(g: &Graph) -> Result<BetweennessProfile, CentralityError> {
    let n = g.vertex_count();
    if n > MAX_ORACLE_VERTICES {
        return Err(CentralityError::OracleCap(n));
    }
    if !g.is_connected() {
        return Err(CentralityError::Disconnected);
    }
    let mut per_vertex = vec![Rat::zero(); n];
    let mut internal = vec![0u64; n];
    for v in 0..n {
        let dist = g.bfs_distances(v);
        for w in v + 1..n {
            if dist[w] == Some(1) {
                continue; // adjacent pairs have no internal vertices
            }
            internal.iter_mut().for_each(|c| *c = 0);
            let mut total = 0u64;
            let mut stack = Vec::new();
            walk_paths(g, &dist, v, w, &mut stack, &mut internal, &mut total);
            for (x, &count) in internal.iter().enumerate() {
                if count > 0 {
                    per_vertex[x] += Rat::ratio(count as i64, total as i64);
                }
            }
        }
    }
    Ok(BetweennessProfile::from_scores(per_vertex))
}

/// Walk every shortest `src..=u` path backwards from `u`, tallying internal
/// vertices of complete paths.
fn walk_paths(
    g: &Graph,
    dist: &[Option<usize>],
    src: usize,
    u: usize,
    stack: &mut Vec<usize>,
    internal: &mut [u64],
    total: &mut u64,
) {
    for &p in g.neighbors(u) {
        if dist[p].map(|d| d + 1) != dist[u] {
            continue;
        }
        if p == src {
            *total += 1;
            for &x in stack.iter() {
                internal[x] += 1;
            }
        } else {
            stack.push(p);
            walk_paths(g, dist, src, p, stack, internal, total);
            stack.pop();
        }
    }
}

/// `Some(B(G))` iff every vertex of the connected graph `g` has the same
/// betweenness.
pub fn is_bug(g: &Graph) -> Result<Option<Rat>, CentralityError> {
    let profile = betweenness_exact(g)?;
    Ok(profile.uniform_value())
}
