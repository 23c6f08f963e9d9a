//! Generators for the known coBUG families. Each generator emits the host
//! graph together with its predicted exact betweenness; tests and the
//! acceptance suite re-certify every prediction rather than trusting it.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{complete_multipartite, cycle_graph, star_graph, Graph};
use crate::rational::Rat;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("stars family needs at least 2 star copies (got {0})")]
    TooFewStars(usize),
    #[error("cycles family needs at least 2 cycles (got {0})")]
    TooFewCycles(usize),
    #[error("cycle length {0} is below 4")]
    CycleTooShort(usize),
    #[error("multipartite family requires more edges than vertices (m = {m}, t = {t})")]
    NotEnoughEdges { m: usize, t: usize },
    #[error("above-one family requires t ≥ 2 (got {0})")]
    ScaleTooSmall(usize),
    #[error("inflated family requires cycle lengths summing to 721 (got {0})")]
    WrongCycleTotal(usize),
}

/// The coBUG families exposed by the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    #[serde(rename = "stars")]
    Stars,
    #[serde(rename = "cycles")]
    Cycles,
    #[serde(rename = "multipartite")]
    MultipartitePlusStars,
    #[serde(rename = "above-one")]
    AboveOne,
    #[serde(rename = "inflated")]
    InflatedCycles,
}

/// A generated host graph with its family, parameters and predicted value.
#[derive(Clone, Debug, Serialize)]
pub struct ConstructionSpec {
    pub family: Family,
    pub parameters: Vec<usize>,
    pub predicted_betweenness: Rat,
}

#[derive(Clone, Debug)]
pub struct Construction {
    pub spec: ConstructionSpec,
    pub graph: Graph,
}

/// `k` disjoint copies of `K_{1,ℓ}`; the complement is a BUG with value
/// `ℓ/(ℓ+1)`.
pub fn stars_cobug(k: usize, leaves: usize) -> Result<Construction, ConstructError> {
    if k < 2 {
        return Err(ConstructError::TooFewStars(k));
    }
    let graph = Graph::disjoint_union(&vec![star_graph(leaves); k]);
    Ok(Construction {
        spec: ConstructionSpec {
            family: Family::Stars,
            parameters: vec![k, leaves],
            predicted_betweenness: Rat::ratio(leaves as i64, leaves as i64 + 1),
        },
        graph,
    })
}

/// Disjoint cycles, each of length at least 4; predicted value 1.
pub fn cycles_cobug(lengths: &[usize]) -> Result<Construction, ConstructError> {
    if lengths.len() < 2 {
        return Err(ConstructError::TooFewCycles(lengths.len()));
    }
    let cycles = checked_cycles(lengths)?;
    Ok(Construction {
        spec: ConstructionSpec {
            family: Family::Cycles,
            parameters: lengths.to_vec(),
            predicted_betweenness: Rat::one(),
        },
        graph: Graph::disjoint_union(&cycles),
    })
}

fn checked_cycles(lengths: &[usize]) -> Result<Vec<Graph>, ConstructError> {
    lengths
        .iter()
        .map(|&len| {
            if len < 4 {
                Err(ConstructError::CycleTooShort(len))
            } else {
                Ok(cycle_graph(len))
            }
        })
        .collect()
}

/// A complete multipartite graph `H` with `m` edges and `t < m` vertices,
/// joined with `m - t` copies of `K_{1,m-1}`; predicted value 1. The host
/// has `m² - mt + t` vertices and equally many edges.
pub fn multipartite_plus_stars(part_sizes: &[usize]) -> Result<Construction, ConstructError> {
    let h = complete_multipartite(part_sizes);
    let (m, t) = (h.edge_count(), h.vertex_count());
    if m <= t {
        return Err(ConstructError::NotEnoughEdges { m, t });
    }
    let mut parts = vec![h];
    parts.extend(std::iter::repeat_n(star_graph(m - 1), m - t));
    let graph = Graph::disjoint_union(&parts);
    debug_assert_eq!(graph.vertex_count(), m * m - m * t + t);
    debug_assert_eq!(graph.edge_count(), graph.vertex_count());
    Ok(Construction {
        spec: ConstructionSpec {
            family: Family::MultipartitePlusStars,
            parameters: part_sizes.to_vec(),
            predicted_betweenness: Rat::one(),
        },
        graph,
    })
}

/// `(4t²-4t-1)` copies of `K_{1,4t²-1}` with `(t+1)` copies of `K_{2t,2t}`;
/// the predicted values `(4t+1)/(4t)` converge to 1 from above.
pub fn family_above_one(t: usize) -> Result<Construction, ConstructError> {
    if t < 2 {
        return Err(ConstructError::ScaleTooSmall(t));
    }
    let k = 4 * t * t - 4 * t - 1;
    let leaves = 4 * t * t - 1;
    let b = t + 1;
    let c = 2 * t;
    let mut parts = vec![star_graph(leaves); k];
    parts.extend(std::iter::repeat_n(complete_multipartite(&[c, c]), b));
    let graph = Graph::disjoint_union(&parts);
    debug_assert_eq!(graph.vertex_count(), 16 * t.pow(4) - 16 * t.pow(3) + 4 * t);
    debug_assert_eq!(graph.edge_count(), k * leaves + b * c * c);
    Ok(Construction {
        spec: ConstructionSpec {
            family: Family::AboveOne,
            parameters: vec![t],
            predicted_betweenness: Rat::ratio(4 * t as i64 + 1, 4 * t as i64),
        },
        graph,
    })
}

/// The 27-fold inflation of a disjoint union of cycles totalling 721
/// vertices (each of length at least 4), joined with 81 copies of
/// `K_{1,3924}`; predicted value 13/4 on 337392 vertices.
pub fn inflated_cycles_cobug(cycle_lengths: &[usize]) -> Result<Construction, ConstructError> {
    let total: usize = cycle_lengths.iter().sum();
    if total != 721 {
        return Err(ConstructError::WrongCycleTotal(total));
    }
    let cycles = checked_cycles(cycle_lengths)?;
    let inflated = Graph::disjoint_union(&cycles).inflate(27).expect("27 ≥ 1");
    let mut parts = vec![inflated];
    parts.extend(std::iter::repeat_n(star_graph(3924), 81));
    let graph = Graph::disjoint_union(&parts);
    debug_assert_eq!(graph.vertex_count(), 337_392);
    debug_assert_eq!(graph.edge_count(), 1_096_524);
    Ok(Construction {
        spec: ConstructionSpec {
            family: Family::InflatedCycles,
            parameters: cycle_lengths.to_vec(),
            predicted_betweenness: Rat::ratio(13, 4),
        },
        graph,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centrality::is_bug;
    use crate::lens::is_cobug;

    fn assert_certified(c: &Construction) {
        let report = is_cobug(&c.graph);
        assert!(report.is_cobug, "{:?} not certified: {:?}", c.spec, report.violations);
        assert_eq!(
            report.betweenness.as_ref(),
            Some(&c.spec.predicted_betweenness),
            "{:?}",
            c.spec
        );
        assert!(!report.exotic);
    }

    #[test]
    fn star_family_certifies() {
        for k in 2..=4 {
            for leaves in 0..=4 {
                let c = stars_cobug(k, leaves).unwrap();
                assert_certified(&c);
                // Direct route on the complement agrees at this scale.
                let direct = is_bug(&c.graph.complement()).unwrap();
                assert_eq!(direct, Some(c.spec.predicted_betweenness.clone()));
            }
        }
        assert_eq!(stars_cobug(1, 3).unwrap_err(), ConstructError::TooFewStars(1));
    }

    #[test]
    fn cycle_family_certifies() {
        for lengths in [vec![4, 4], vec![5, 7], vec![4, 4, 4], vec![6, 9, 11]] {
            let c = cycles_cobug(&lengths).unwrap();
            assert_certified(&c);
            assert_eq!(c.spec.predicted_betweenness, Rat::one());
            let direct = is_bug(&c.graph.complement()).unwrap();
            assert_eq!(direct, Some(Rat::one()));
        }
        assert_eq!(cycles_cobug(&[4]).unwrap_err(), ConstructError::TooFewCycles(1));
        assert_eq!(cycles_cobug(&[4, 3]).unwrap_err(), ConstructError::CycleTooShort(3));
    }

    #[test]
    fn multipartite_family_certifies() {
        let cases: [(&[usize], usize); 3] = [(&[1, 1, 2], 9), (&[2, 3], 11), (&[3, 3], 33)];
        for (parts, n) in cases {
            let c = multipartite_plus_stars(parts).unwrap();
            assert_eq!(c.graph.vertex_count(), n, "parts {parts:?}");
            assert_certified(&c);
            // Both component types share co-betweenness 1/(m-t).
            let h = crate::graph::complete_multipartite(parts);
            let gap = h.edge_count() - h.vertex_count();
            let summary = crate::lens::co_betweenness_summary(&c.graph).unwrap();
            assert_eq!(summary.common_value(), Some(&Rat::recip_of(gap as i64)));
        }
        // K_{2,2} has 4 edges and 4 vertices: hypothesis m > t fails.
        assert_eq!(
            multipartite_plus_stars(&[2, 2]).unwrap_err(),
            ConstructError::NotEnoughEdges { m: 4, t: 4 }
        );
    }

    #[test]
    fn above_one_small_case() {
        let c = family_above_one(2).unwrap();
        assert_eq!(c.graph.vertex_count(), 136);
        assert_eq!(c.graph.edge_count(), 153);
        assert_eq!(c.spec.predicted_betweenness, Rat::ratio(9, 8));
        assert_certified(&c);
        assert_eq!(family_above_one(1).unwrap_err(), ConstructError::ScaleTooSmall(1));
    }

    #[test]
    fn above_one_values_decrease_toward_one() {
        let mut last = family_above_one(2).unwrap().spec.predicted_betweenness;
        for t in 3..=6 {
            let next = family_above_one(t).unwrap().spec.predicted_betweenness;
            assert!(next < last && next > Rat::one());
            last = next;
        }
    }

    #[test]
    fn above_one_co_betweenness_value() {
        // Star and bipartite components both sit at 1/(4t^2 - 4t).
        for t in [2usize, 3] {
            let c = family_above_one(t).unwrap();
            let summary = crate::lens::co_betweenness_summary(&c.graph).unwrap();
            assert_eq!(
                summary.common_value(),
                Some(&Rat::recip_of((4 * t * t - 4 * t) as i64)),
                "t = {t}"
            );
        }
    }

    #[test]
    fn inflated_family_validates_parameters() {
        assert_eq!(inflated_cycles_cobug(&[720]).unwrap_err(), ConstructError::WrongCycleTotal(720));
        assert_eq!(inflated_cycles_cobug(&[3, 718]).unwrap_err(), ConstructError::CycleTooShort(3));
    }
}
