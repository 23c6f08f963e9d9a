//! Certification of coBUG candidates through the complement lens.
//!
//! For a host graph H on n vertices: a vertex is *close* to an edge when it
//! is adjacent to an endpoint (endpoints are close to their own edge), an
//! edge has weight `1/(n - |close(e)|)`, and the co-betweenness of a vertex
//! is the total weight of the edges close to it. When the complement G of H
//! has diameter at most 2, `B_G(x) = Σ_e w(e) - coB_H(x)`, so G is
//! betweenness-uniform exactly when all co-betweenness values in H agree.
//! This certifies uniformity from purely local data in H, which is what
//! makes the million-edge construction checkable without ever touching its
//! dense complement.

use std::collections::HashMap;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::centrality::betweenness_exact;
use crate::graph::{ComponentInventory, Diameter, Graph};
use crate::rational::Rat;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LensError {
    #[error("edge ({0}, {1}) is close to all vertices; its weight is undefined")]
    UndefinedWeight(usize, usize),
    #[error("weight identity requires diameter at most 2 (diameter is {0})")]
    DiameterTooLarge(Diameter),
    #[error("({0}, {1}) is not an edge of the host graph")]
    UnknownEdge(usize, usize),
}

/// Count of the sorted-merge union of two neighbor lists.
fn union_count(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        count += 1;
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    count + (a.len() - i) + (b.len() - j)
}

/// Visit the sorted-merge union of two neighbor lists.
fn union_for_each(a: &[usize], b: &[usize], mut f: impl FnMut(usize)) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                f(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                f(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                f(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    a[i..].iter().chain(&b[j..]).for_each(|&v| f(v));
}

fn sorted_union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    union_for_each(a, b, |v| out.push(v));
    out
}

/// Materialized closeness sets of a host graph: vertices close to each edge
/// and edges close to each vertex.
#[derive(Clone, Debug)]
pub struct ClosenessTables {
    pub n_total: usize,
    /// Edges `(u, v)` with `u < v`, ascending; edge ids index this list.
    pub edges: Vec<(usize, usize)>,
    /// Per edge id: sorted vertices close to it.
    pub close_of_edge: Vec<Vec<usize>>,
    /// Per vertex: sorted ids of the edges close to it.
    pub close_of_vertex: Vec<Vec<usize>>,
}

impl ClosenessTables {
    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }
}

pub fn closeness_tables(h: &Graph) -> ClosenessTables {
    let n = h.vertex_count();
    let edges: Vec<(usize, usize)> = h.edges().collect();
    let mut close_of_edge = Vec::with_capacity(edges.len());
    let mut close_of_vertex = vec![Vec::new(); n];
    for (id, &(u, v)) in edges.iter().enumerate() {
        let close = sorted_union(h.neighbors(u), h.neighbors(v));
        for &z in &close {
            close_of_vertex[z].push(id);
        }
        close_of_edge.push(close);
    }
    ClosenessTables { n_total: n, edges, close_of_edge, close_of_vertex }
}

/// `|close(e)|` for a single edge, straight from the neighbor lists; usable
/// at any scale without building tables.
pub fn edge_close_count(h: &Graph, u: usize, v: usize) -> Result<usize, LensError> {
    if !h.has_edge(u, v) {
        return Err(LensError::UnknownEdge(u, v));
    }
    Ok(union_count(h.neighbors(u), h.neighbors(v)))
}

/// `w(e) = 1/(n - |close(e)|)`, undefined when every vertex is close to `e`.
pub fn edge_weight(tables: &ClosenessTables, u: usize, v: usize) -> Result<Rat, LensError> {
    let id = tables.edge_id(u, v).ok_or(LensError::UnknownEdge(u, v))?;
    let close = tables.close_of_edge[id].len();
    if close == tables.n_total {
        let (u, v) = tables.edges[id];
        return Err(LensError::UndefinedWeight(u, v));
    }
    Ok(Rat::recip_of((tables.n_total - close) as i64))
}

/// Edge weights, per-vertex co-betweenness and the total edge weight,
/// fully materialized. Intended for desk-scale hosts; for large graphs use
/// [`co_betweenness_summary`].
#[derive(Clone, Debug)]
pub struct WeightedComplement {
    pub tables: ClosenessTables,
    /// Per edge id.
    pub weights: Vec<Rat>,
    /// Per vertex.
    pub co_betweenness: Vec<Rat>,
    pub total_weight: Rat,
}

pub fn co_betweenness_all(h: &Graph) -> Result<WeightedComplement, LensError> {
    let tables = closeness_tables(h);
    let mut weights = Vec::with_capacity(tables.edges.len());
    for id in 0..tables.edges.len() {
        let (u, v) = tables.edges[id];
        weights.push(edge_weight(&tables, u, v)?);
    }
    let total_weight: Rat = weights.iter().cloned().sum();
    let co_betweenness: Vec<Rat> = tables
        .close_of_vertex
        .iter()
        .map(|ids| ids.iter().map(|&id| weights[id].clone()).sum())
        .collect();
    Ok(WeightedComplement { tables, weights, co_betweenness, total_weight })
}

/// Co-betweenness of every vertex, computed by counting close edges per
/// distinct close-set size instead of materializing the close sets. Memory
/// is O(n · #distinct sizes); the arithmetic stays exact.
#[derive(Clone, Debug)]
pub struct CoBetweennessSummary {
    pub n: usize,
    pub edge_count: usize,
    pub total_weight: Rat,
    /// Distinct co-betweenness values, ascending, with a witness vertex and
    /// the number of vertices attaining each value.
    pub distinct: Vec<(Rat, usize, usize)>,
    pub is_uniform: bool,
}

impl CoBetweennessSummary {
    /// The common co-betweenness, when uniform.
    pub fn common_value(&self) -> Option<&Rat> {
        (self.is_uniform && !self.distinct.is_empty()).then(|| &self.distinct[0].0)
    }
}

pub fn co_betweenness_summary(h: &Graph) -> Result<CoBetweennessSummary, LensError> {
    let n = h.vertex_count();
    // Pass 1: |close(e)| per edge; tally edges per distinct size.
    let mut edge_sizes: Vec<u32> = Vec::with_capacity(h.edge_count());
    let mut size_multiplicity: HashMap<usize, usize> = HashMap::new();
    for (u, v) in h.edges() {
        let c = union_count(h.neighbors(u), h.neighbors(v));
        if c == n {
            return Err(LensError::UndefinedWeight(u, v));
        }
        edge_sizes.push(c as u32);
        *size_multiplicity.entry(c).or_insert(0) += 1;
    }
    let mut sizes: Vec<usize> = size_multiplicity.keys().copied().collect();
    sizes.sort_unstable();
    let k = sizes.len();
    let size_slot: HashMap<u32, usize> =
        sizes.iter().enumerate().map(|(i, &s)| (s as u32, i)).collect();

    // Pass 2: per vertex, count close edges in each size slot.
    let mut counters = vec![0u32; n * k.max(1)];
    for (edge_id, (u, v)) in h.edges().enumerate() {
        let slot = size_slot[&edge_sizes[edge_id]];
        union_for_each(h.neighbors(u), h.neighbors(v), |z| {
            counters[z * k + slot] += 1;
        });
    }

    let weight_of_slot: Vec<Rat> =
        sizes.iter().map(|&s| Rat::recip_of((n - s) as i64)).collect();
    let total_weight: Rat = sizes
        .iter()
        .enumerate()
        .map(|(i, &s)| Rat::from(size_multiplicity[&s]) * &weight_of_slot[i])
        .sum();

    // Vertices sharing a counter row share a value; evaluate once per row.
    let mut row_index: HashMap<&[u32], usize> = HashMap::new();
    let mut distinct_rows: Vec<(Rat, usize, usize)> = Vec::new();
    for v in 0..n {
        let row = &counters[v * k..v * k + k];
        if let Some(&i) = row_index.get(row) {
            distinct_rows[i].2 += 1;
        } else {
            let value: Rat =
                row.iter().zip(&weight_of_slot).map(|(&c, w)| Rat::from(c as usize) * w).sum();
            row_index.insert(row, distinct_rows.len());
            distinct_rows.push((value, v, 1));
        }
    }
    drop(row_index);
    // Different counter rows can still evaluate to the same rational.
    distinct_rows.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    let mut distinct: Vec<(Rat, usize, usize)> = Vec::new();
    for (value, witness, count) in distinct_rows {
        match distinct.last_mut() {
            Some(last) if last.0 == value => last.2 += count,
            _ => distinct.push((value, witness, count)),
        }
    }
    let is_uniform = distinct.len() <= 1;
    Ok(CoBetweennessSummary { n, edge_count: h.edge_count(), total_weight, distinct, is_uniform })
}

/// Cross-validates `B_G(x) = Σ_e w(e) - coB(x)` on the complement of `g`,
/// for every vertex. Requires `diam(g) ≤ 2`.
pub fn weight_identity_check(g: &Graph) -> Result<bool, LensError> {
    let d = g.diameter();
    if !d.is_at_most(2) {
        return Err(LensError::DiameterTooLarge(d));
    }
    let wc = co_betweenness_all(&g.complement())?;
    let profile = betweenness_exact(g).expect("diameter at most 2 implies connected");
    Ok(profile
        .per_vertex
        .iter()
        .zip(&wc.co_betweenness)
        .all(|(b, cob)| *b == &wc.total_weight - cob))
}

/// First pair `(x, y)` with `close(x) ⊊ close(y)`, if any. Such a graph can
/// never be a component of a disconnected coBUG.
pub fn close_inclusion_violation(h: &Graph) -> Option<(usize, usize)> {
    let tables = closeness_tables(h);
    let n = h.vertex_count();
    for x in 0..n {
        for y in 0..n {
            if x != y && is_strict_subset(&tables.close_of_vertex[x], &tables.close_of_vertex[y]) {
                return Some((x, y));
            }
        }
    }
    None
}

fn is_strict_subset(a: &[usize], b: &[usize]) -> bool {
    if a.len() >= b.len() {
        return false;
    }
    let mut j = 0;
    for &x in a {
        loop {
            if j == b.len() {
                return false;
            }
            if b[j] == x {
                j += 1;
                break;
            }
            if b[j] > x {
                return false;
            }
            j += 1;
        }
    }
    true
}

/// Verdict on a coBUG candidate, with the exact betweenness of the
/// complement when it is defined.
#[derive(Clone, Debug, Serialize)]
pub struct CertificationReport {
    pub is_cobug: bool,
    pub complement_is_bug: bool,
    pub betweenness: Option<Rat>,
    pub exotic: bool,
    pub exotic_reason: String,
    #[serde(rename = "components", serialize_with = "serialize_inventory")]
    pub inventory: ComponentInventory,
    pub violations: Vec<String>,
}

fn serialize_inventory<S: Serializer>(
    inv: &ComponentInventory,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Summary {
        size: usize,
        edges: usize,
        star: Option<usize>,
    }
    serializer.collect_seq(inv.components.iter().map(|c| Summary {
        size: c.vertex_count(),
        edges: c.edge_count,
        star: c.star,
    }))
}

pub const VIOLATION_EMPTY_GRAPH: &str = "empty-graph";
pub const VIOLATION_UNDEFINED_WEIGHT: &str = "undefined-edge-weight";
pub const VIOLATION_COB_NOT_UNIFORM: &str = "co-betweenness-not-uniform";
pub const VIOLATION_COMPLEMENT_DISCONNECTED: &str = "complement-disconnected";
pub const VIOLATION_BETWEENNESS_NOT_UNIFORM: &str = "betweenness-not-uniform";

/// Certify whether `hbar` is a coBUG, i.e. whether its complement is a BUG.
///
/// Disconnected hosts (and connected hosts whose complement still has
/// diameter at most 2) are certified through co-betweenness uniformity,
/// reading only local structure of `hbar`; the betweenness reported is then
/// `|E(hbar)|/n`, the equality case of the edge-vertex-ratio bound. Only
/// when the complement has diameter 3 or more does certification fall back
/// to running exact betweenness on the complement itself.
pub fn is_cobug(hbar: &Graph) -> CertificationReport {
    let n = hbar.vertex_count();
    let inventory = hbar.components();
    let mut report = CertificationReport {
        is_cobug: false,
        complement_is_bug: false,
        betweenness: None,
        exotic: false,
        exotic_reason: String::new(),
        inventory,
        violations: Vec::new(),
    };
    if n == 0 {
        report.violations.push(VIOLATION_EMPTY_GRAPH.into());
        report.exotic_reason = "empty graph".into();
        return report;
    }

    if report.inventory.len() > 1 {
        // Disconnected host: its complement has diameter at most 2.
        certify_via_co_betweenness(hbar, &mut report);
    } else {
        let complement = hbar.complement();
        if complement.diameter().is_at_most(2) {
            certify_via_co_betweenness(hbar, &mut report);
        } else {
            // Diameter ≥ 3 (or infinite): some edge of hbar is close to all
            // vertices, so the weight calculus does not apply.
            if hbar.spanning_double_star().is_some() {
                report.violations.push(VIOLATION_UNDEFINED_WEIGHT.into());
            }
            if !complement.is_connected() {
                report.violations.push(VIOLATION_COMPLEMENT_DISCONNECTED.into());
            } else {
                let profile =
                    betweenness_exact(&complement).expect("connectivity checked above");
                if profile.is_uniform {
                    report.is_cobug = true;
                    report.complement_is_bug = true;
                    report.betweenness = profile.uniform_value();
                } else {
                    report.violations.push(VIOLATION_BETWEENNESS_NOT_UNIFORM.into());
                }
            }
        }
    }

    let (exotic, reason) = exotic_verdict(&report);
    report.exotic = exotic;
    report.exotic_reason = reason;
    report
}

fn certify_via_co_betweenness(hbar: &Graph, report: &mut CertificationReport) {
    match co_betweenness_summary(hbar) {
        Ok(summary) if summary.is_uniform => {
            report.is_cobug = true;
            report.complement_is_bug = true;
            report.betweenness = Some(Rat::from(summary.edge_count) / Rat::from(summary.n));
        }
        Ok(_) => {
            report.violations.push(VIOLATION_COB_NOT_UNIFORM.into());
        }
        Err(LensError::UndefinedWeight(..)) => {
            // Unreachable when the complement has diameter ≤ 2; kept as a
            // hard failure signal rather than a silent pass.
            report.violations.push(VIOLATION_UNDEFINED_WEIGHT.into());
        }
        Err(_) => unreachable!("summary only fails on undefined weights"),
    }
}

fn exotic_verdict(report: &CertificationReport) -> (bool, String) {
    if !report.is_cobug {
        return (false, "not a coBUG".into());
    }
    let value = report.betweenness.as_ref().expect("certified coBUGs carry a value");
    if *value >= Rat::one() {
        return (false, format!("betweenness {value} is not below 1"));
    }
    match report.inventory.uniform_star_size() {
        Some(l) => (false, format!("disjoint union of stars K_1,{l}")),
        None => (
            true,
            format!("betweenness {value} below 1 and components are not equal stars"),
        ),
    }
}
