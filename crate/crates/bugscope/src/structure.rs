//! Structural predicates on candidate coBUG components: uniformity,
//! complete-multipartite recognition, edge excess, the closeness parameter,
//! and the degree filters that a non-star component of an exotic coBUG
//! would have to survive.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::lens::{close_inclusion_violation, closeness_tables};
use crate::rational::Rat;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("structural filters apply to non-star components (input is K_1,{0})")]
    StarInput(usize),
    #[error("closeness bound requires c > ℓ (got c = {c}, ℓ = {ell})")]
    ClosenessNotAboveStar { ell: usize, c: usize },
}

/// Whether every vertex is close to the same number of edges (m) and every
/// edge close to the same number of vertices (t).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniformityReport {
    pub is_uniform: bool,
    pub m: Option<usize>,
    pub t: Option<usize>,
    pub is_complete_multipartite: bool,
}

pub fn uniformity_params(h: &Graph) -> UniformityReport {
    let tables = closeness_tables(h);
    let m = common_length(tables.close_of_vertex.iter().map(Vec::len));
    let t = common_length(tables.close_of_edge.iter().map(Vec::len));
    let is_uniform = m.is_some() && t.is_some();
    UniformityReport {
        is_uniform,
        m: if is_uniform { m } else { None },
        t: if is_uniform { t } else { None },
        is_complete_multipartite: is_complete_multipartite(h),
    }
}

fn common_length(mut lengths: impl Iterator<Item = usize>) -> Option<usize> {
    let first = lengths.next()?;
    lengths.all(|l| l == first).then_some(first)
}

/// True iff `h` has no induced `K_2 + K_1`, i.e. some vertex not close to
/// some edge. Equivalent to the complement being a disjoint union of cliques.
pub fn is_complete_multipartite(h: &Graph) -> bool {
    for (u, v) in h.edges() {
        for x in 0..h.vertex_count() {
            if x != u && x != v && !h.has_edge(x, u) && !h.has_edge(x, v) {
                return false;
            }
        }
    }
    true
}

/// Edge excess `|E| - |V|`.
pub fn excess(h: &Graph) -> i64 {
    h.edge_count() as i64 - h.vertex_count() as i64
}

/// Closeness `c(H)`: the maximum number of edges close to a single vertex.
pub fn closeness(h: &Graph) -> usize {
    closeness_tables(h).close_of_vertex.iter().map(Vec::len).max().unwrap_or(0)
}

/// Names of the structural claims evaluated by [`structural_filters`].
pub const CLAIM_DEGREE_1: &str = "degree-1";
pub const CLAIM_TRIANGLE_DEG2: &str = "triangle-deg2";
pub const CLAIM_C4C5_ADJACENT_DEG2: &str = "c4c5-adjacent-deg2";
pub const CLAIM_PATH_OF_THREE_DEG2: &str = "path-of-three-deg2";
pub const CLAIM_CLOSE_INCLUSION: &str = "close-inclusion";
pub const CLAIM_MIN_CLOSE_4: &str = "min-close-4";
pub const CLAIM_MIN_SIZE_6: &str = "min-size-6";
pub const CLAIM_EXCESS_LT_2: &str = "excess-lt-2";
pub const CLAIM_CLOSENESS_BOUND: &str = "closeness-bound";

/// Outcome of every structural claim on one candidate component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralVerdict {
    pub passes: bool,
    pub failed_claims: Vec<String>,
}

/// Evaluate every structural requirement a non-star component of an exotic
/// coBUG must satisfy. All claims are checked (no short-circuiting) so the
/// verdict lists every violated condition.
pub fn structural_filters(h: &Graph) -> Result<StructuralVerdict, StructureError> {
    if let Some(l) = h.star_parameter() {
        return Err(StructureError::StarInput(l));
    }
    let n = h.vertex_count();
    let mut failed: Vec<String> = Vec::new();
    let mut fail = |claim: &str| failed.push(claim.to_string());

    if (0..n).any(|v| h.degree(v) == 1) {
        fail(CLAIM_DEGREE_1);
    }

    // A degree-2 vertex whose two neighbors are adjacent.
    if (0..n).any(|v| h.degree(v) == 2 && h.has_edge(h.neighbors(v)[0], h.neighbors(v)[1])) {
        fail(CLAIM_TRIANGLE_DEG2);
    }

    // Adjacent degree-2 vertices x, y on a common 4- or 5-cycle: with u the
    // other neighbor of x and v the other neighbor of y, that cycle exists
    // exactly when uv is an edge (C4) or u and v share another neighbor (C5).
    let mut c4c5 = false;
    for (x, y) in h.edges() {
        if h.degree(x) != 2 || h.degree(y) != 2 {
            continue;
        }
        let u = other_neighbor(h, x, y);
        let v = other_neighbor(h, y, x);
        if u == v {
            continue; // triangle, caught by the previous claim
        }
        if h.has_edge(u, v)
            || h.neighbors(u).iter().any(|&w| w != x && w != y && h.has_edge(w, v))
        {
            c4c5 = true;
        }
    }
    if c4c5 {
        fail(CLAIM_C4C5_ADJACENT_DEG2);
    }

    // Three degree-2 vertices forming a path x-y-z.
    if (0..n).any(|y| {
        h.degree(y) == 2
            && h.degree(h.neighbors(y)[0]) == 2
            && h.degree(h.neighbors(y)[1]) == 2
    }) {
        fail(CLAIM_PATH_OF_THREE_DEG2);
    }

    if close_inclusion_violation(h).is_some() {
        fail(CLAIM_CLOSE_INCLUSION);
    }

    let tables = closeness_tables(h);
    if tables.close_of_edge.iter().any(|c| c.len() < 4) {
        fail(CLAIM_MIN_CLOSE_4);
    }

    if n < 6 {
        fail(CLAIM_MIN_SIZE_6);
    }

    if excess(h) < 2 {
        fail(CLAIM_EXCESS_LT_2);
    }

    // Every vertex of degree d must have at least 2d close edges.
    if (0..n).any(|v| tables.close_of_vertex[v].len() < 2 * h.degree(v)) {
        fail(CLAIM_CLOSENESS_BOUND);
    }

    Ok(StructuralVerdict { passes: failed.is_empty(), failed_claims: failed })
}

fn other_neighbor(h: &Graph, v: usize, not: usize) -> usize {
    let nbrs = h.neighbors(v);
    if nbrs[0] == not {
        nbrs[1]
    } else {
        nbrs[0]
    }
}

/// Feasibility of combining a star `K_{1,ℓ}` with an `(m,t)`-uniform
/// component in one coBUG. The host size is forced to
/// `n = ℓ+1 + ℓ(ℓ+1-t)/(m-ℓ)`; the remaining conditions must all hold and
/// `n` must be a positive integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarUniformFeasibility {
    /// The forced host size, exact; `None` when `m = ℓ` leaves it undefined.
    pub n_exact: Option<Rat>,
    /// `n` as an integer when it is one.
    pub n: Option<u64>,
    pub feasible: bool,
    pub reasons: Vec<String>,
}

pub fn star_uniform_constraints(ell: usize, m: usize, t: usize) -> StarUniformFeasibility {
    assert!(m >= 1 && t >= 2, "uniform components have m ≥ 1 and t ≥ 2");
    let mut reasons = Vec::new();
    if m == ell {
        return StarUniformFeasibility {
            n_exact: None,
            n: None,
            feasible: false,
            reasons: vec!["m = ℓ forces a tree component, so H would be a star".into()],
        };
    }
    let (ell_r, m_r, t_r) = (Rat::from(ell), Rat::from(m), Rat::from(t));
    let spare = &ell_r * &(&(&ell_r + &Rat::one()) - &t_r) / (&m_r - &ell_r);
    let n_exact = &ell_r + &Rat::one() + &spare;

    if spare < t_r {
        reasons.push(format!("ℓ(ℓ+1-t)/(m-ℓ) = {spare} is below t = {t}"));
    }
    if m <= ell {
        reasons.push(format!("m = {m} is not above ℓ = {ell}"));
    }
    if t > ell {
        reasons.push(format!("t = {t} is not below ℓ+1 = {}", ell + 1));
    }
    if ell * (ell + 1) < m * t {
        reasons.push(format!("ℓ(ℓ+1) = {} is below mt = {}", ell * (ell + 1), m * t));
    }
    let n = n_exact
        .to_integer()
        .and_then(|i| u64::try_from(i).ok())
        .filter(|&i| i > 0);
    if n.is_none() {
        reasons.push(format!("forced host size {n_exact} is not a positive integer"));
    }
    StarUniformFeasibility { feasible: reasons.is_empty(), n_exact: Some(n_exact), n, reasons }
}

/// Largest host size compatible with a star `K_{1,ℓ}` and a non-star
/// component of closeness `c`: `⌊(c(ℓ+1) - 4ℓ)/(c - ℓ)⌋`. Requires `c > ℓ`.
pub fn closeness_bound(ell: usize, c: usize) -> Result<i64, StructureError> {
    if c <= ell {
        return Err(StructureError::ClosenessNotAboveStar { ell, c });
    }
    let num = c as i64 * (ell as i64 + 1) - 4 * ell as i64;
    let den = (c - ell) as i64;
    Ok(num.div_euclid(den))
}
