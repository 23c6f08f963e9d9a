//! Exhaustive desk-scale search for exotic coBUGs.
//!
//! A candidate host combines k copies of a star `K_{1,ℓ}` with one or two
//! connected non-star components. Star vertices force every co-betweenness
//! to equal `ℓ/(n-ℓ-1)`, so for each surviving candidate component the
//! search only has to scan the finite window of host sizes n allowed by the
//! excess and closeness bounds and compare exact rationals. Every enumerated
//! component is accounted for in the pruning tallies; nothing is dropped
//! silently.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::centrality::is_bug;
use crate::enumerate::{connected_graphs, EnumError, MAX_ENUM_VERTICES};
use crate::graph::Graph;
use crate::io::{read_graph6_corpus, write_graph6, IoError};
use crate::lens::{close_inclusion_violation, closeness_tables, is_cobug, CertificationReport};
use crate::rational::Rat;
use crate::structure::{closeness, closeness_bound, excess, structural_filters, uniformity_params};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error("corpus: {0}")]
    Corpus(#[from] IoError),
    #[error("component cap {0} exceeds the built-in enumerator; supply a corpus file")]
    CapNeedsCorpus(usize),
}

/// Parameters of one search run.
#[derive(Clone, Debug, Serialize)]
pub struct SearchConfig {
    pub ell_min: usize,
    pub ell_max: usize,
    /// Largest vertex count of a candidate non-star component.
    pub component_vertex_cap: usize,
    /// Hard ceiling on the host size n; bounds derived from the lemmas may
    /// shrink individual windows further.
    pub n_cap: usize,
    /// 1 or 2 non-star components per host.
    pub max_nonstar_components: usize,
    /// Optional graph6 file supplying candidate components instead of the
    /// built-in enumerator.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corpus: Option<std::path::PathBuf>,
    /// Permit hosts with at least as many edges as vertices (betweenness ≥ 1
    /// regime). Off by default: the exotic regime requires negative excess,
    /// and the structural filters are only justified there.
    pub allow_betweenness_ge_one: bool,
}

impl SearchConfig {
    /// Exotic-regime defaults: the host ceiling is the closeness-corollary
    /// bound `(ℓ+1)² - 4ℓ` at the largest star size.
    pub fn exotic(ell_min: usize, ell_max: usize, component_vertex_cap: usize) -> Self {
        let n_cap = (ell_max + 1) * (ell_max + 1) - 4 * ell_max;
        SearchConfig {
            ell_min,
            ell_max,
            component_vertex_cap,
            n_cap,
            max_nonstar_components: 1,
            corpus: None,
            allow_betweenness_ge_one: false,
        }
    }
}

/// A certified hit: the host graph and its full certification.
#[derive(Clone, Debug, Serialize)]
pub struct SearchHit {
    pub graph6: String,
    pub ell: usize,
    pub star_copies: usize,
    pub host_vertices: usize,
    pub report: CertificationReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub config: SearchConfig,
    pub found: Vec<SearchHit>,
    /// Per-filter tallies; `component:*` counts enumerated components,
    /// `config:*` counts (ℓ, component multiset) combinations.
    pub pruned_counts: BTreeMap<String, u64>,
    pub exhausted: bool,
}

// Component-level tally keys.
const TALLY_STAR: &str = "component:star";
const TALLY_STRUCTURAL: &str = "component:structural";
const TALLY_CLOSE_INCLUSION: &str = "component:close-inclusion";
const TALLY_UNIFORM: &str = "component:uniform";
const TALLY_SURVIVED: &str = "component:survived";
// Configuration-level tally keys.
const TALLY_CLOSENESS_LE_ELL: &str = "config:closeness-not-above-star";
const TALLY_WINDOW_EMPTY: &str = "config:window-empty";
const TALLY_NO_DIVISIBLE_N: &str = "config:no-divisible-host-size";
const TALLY_COB_MISMATCH: &str = "config:co-betweenness-mismatch";
const TALLY_EDGE_COUNT: &str = "config:edge-count-at-least-n";
const TALLY_ACCEPTED: &str = "config:accepted";

fn bump(tallies: &mut BTreeMap<String, u64>, key: &str) {
    *tallies.entry(key.to_string()).or_insert(0) += 1;
}

/// Why a component was pruned, or proof data for the survivors.
enum ComponentScreen {
    Pruned(&'static str),
    Survived(CandidateComponent),
}

/// A non-star component that passed every filter, with the per-vertex
/// close-size profiles needed to evaluate co-betweenness for any host size.
#[derive(Clone, Debug)]
struct CandidateComponent {
    graph: Graph,
    /// For each vertex: (|close(e)|, multiplicity) over the edges close to it.
    vertex_profiles: Vec<Vec<(usize, u32)>>,
    closeness: usize,
}

impl CandidateComponent {
    fn new(graph: Graph) -> Self {
        let tables = closeness_tables(&graph);
        let vertex_profiles = tables
            .close_of_vertex
            .iter()
            .map(|ids| {
                let mut counts: BTreeMap<usize, u32> = BTreeMap::new();
                for &id in ids {
                    *counts.entry(tables.close_of_edge[id].len()).or_insert(0) += 1;
                }
                counts.into_iter().collect()
            })
            .collect();
        let closeness = closeness(&graph);
        CandidateComponent { graph, vertex_profiles, closeness }
    }

    /// Co-betweenness of vertex `v` inside a host with `n` vertices in
    /// total. Close sets never cross components, so only `n` varies.
    fn co_betweenness_at(&self, v: usize, n: usize) -> Rat {
        self.vertex_profiles[v]
            .iter()
            .map(|&(size, count)| {
                Rat::from(count as usize) * Rat::recip_of((n - size) as i64)
            })
            .sum()
    }

    /// True iff every vertex has co-betweenness exactly `target` in a host
    /// of size `n`.
    fn matches_everywhere(&self, n: usize, target: &Rat) -> bool {
        (0..self.graph.vertex_count()).all(|v| self.co_betweenness_at(v, n) == *target)
    }
}

/// Screen one connected graph against the component filters. In the exotic
/// regime the full filter battery applies; with betweenness ≥ 1 allowed
/// only the unconditional close-inclusion filter does.
fn screen_component(g: Graph, exotic_only: bool) -> ComponentScreen {
    if g.star_parameter().is_some() {
        return ComponentScreen::Pruned(TALLY_STAR);
    }
    if close_inclusion_violation(&g).is_some() {
        return ComponentScreen::Pruned(TALLY_CLOSE_INCLUSION);
    }
    if exotic_only {
        if uniformity_params(&g).is_uniform {
            return ComponentScreen::Pruned(TALLY_UNIFORM);
        }
        let verdict = structural_filters(&g).expect("stars were screened out");
        if !verdict.passes {
            return ComponentScreen::Pruned(TALLY_STRUCTURAL);
        }
        if excess(&g) < 2 {
            // Covered by the structural verdict, but kept as a guard for
            // corpus-supplied candidates.
            return ComponentScreen::Pruned(TALLY_STRUCTURAL);
        }
    }
    ComponentScreen::Survived(CandidateComponent::new(g))
}

fn raw_candidates(cfg: &SearchConfig) -> Result<Vec<Graph>, SearchError> {
    match &cfg.corpus {
        Some(path) => {
            let graphs = read_graph6_corpus(path)?;
            Ok(graphs
                .into_iter()
                .filter(|g| {
                    g.vertex_count() <= cfg.component_vertex_cap && g.is_connected()
                })
                .collect())
        }
        None => {
            if cfg.component_vertex_cap > MAX_ENUM_VERTICES {
                return Err(SearchError::CapNeedsCorpus(cfg.component_vertex_cap));
            }
            let mut all = Vec::new();
            for n in 1..=cfg.component_vertex_cap {
                all.extend(connected_graphs(n)?);
            }
            Ok(all)
        }
    }
}

/// Connected non-star graphs up to the configured cap that survive every
/// component filter, with the pruning tallies for the rest.
pub fn candidate_components(
    cfg: &SearchConfig,
) -> Result<(Vec<Graph>, BTreeMap<String, u64>), SearchError> {
    let (survivors, tallies) = screened_components(cfg)?;
    Ok((survivors.into_iter().map(|c| c.graph).collect(), tallies))
}

fn screened_components(
    cfg: &SearchConfig,
) -> Result<(Vec<CandidateComponent>, BTreeMap<String, u64>), SearchError> {
    let raw = raw_candidates(cfg)?;
    let exotic_only = !cfg.allow_betweenness_ge_one;
    let screened: Vec<ComponentScreen> =
        raw.into_par_iter().map(|g| screen_component(g, exotic_only)).collect();
    let mut tallies = BTreeMap::new();
    let mut survivors = Vec::new();
    for s in screened {
        match s {
            ComponentScreen::Pruned(key) => bump(&mut tallies, key),
            ComponentScreen::Survived(c) => {
                bump(&mut tallies, TALLY_SURVIVED);
                survivors.push(c);
            }
        }
    }
    Ok((survivors, tallies))
}

/// One candidate multiset of non-star components (size 1 or 2).
struct CandidateSet<'a> {
    parts: Vec<&'a CandidateComponent>,
}

impl<'a> CandidateSet<'a> {
    fn vertex_total(&self) -> usize {
        self.parts.iter().map(|p| p.graph.vertex_count()).sum()
    }

    fn edge_total(&self) -> usize {
        self.parts.iter().map(|p| p.graph.edge_count()).sum()
    }

    fn min_closeness(&self) -> usize {
        self.parts.iter().map(|p| p.closeness).min().unwrap_or(0)
    }

    fn matches_everywhere(&self, n: usize, target: &Rat) -> bool {
        self.parts.iter().all(|p| p.matches_everywhere(n, target))
    }

    fn assemble(&self, ell: usize, star_copies: usize) -> Graph {
        let mut parts: Vec<Graph> =
            self.parts.iter().map(|p| p.graph.clone()).collect();
        parts.extend(std::iter::repeat_n(crate::graph::star_graph(ell), star_copies));
        Graph::disjoint_union(&parts)
    }
}

struct WindowOutcome {
    tallies: BTreeMap<String, u64>,
    hits: Vec<SearchHit>,
}

/// Scan all host sizes for one (ℓ, candidate multiset) combination.
fn scan_window(cfg: &SearchConfig, ell: usize, set: &CandidateSet<'_>) -> WindowOutcome {
    let mut outcome = WindowOutcome { tallies: BTreeMap::new(), hits: Vec::new() };
    let t_total = set.vertex_total();
    let exotic_only = !cfg.allow_betweenness_ge_one;

    // Any vertex of a non-star component is close to at most c(H) edges of
    // weight at most 1/(n-4); star vertices need ℓ/(n-ℓ-1). With c ≤ ℓ the
    // star value is out of reach.
    if exotic_only && set.min_closeness() <= ell {
        bump(&mut outcome.tallies, TALLY_CLOSENESS_LE_ELL);
        return outcome;
    }

    // Exotic hosts have negative excess, which forces more star components
    // than the total non-star excess, hence at least 3 of them.
    let min_stars = if exotic_only { 3 } else { 1 };
    let lo = t_total + min_stars * (ell + 1);
    let mut hi = cfg.n_cap;
    if exotic_only {
        for part in &set.parts {
            let c = part.closeness;
            if c > ell {
                let bound = closeness_bound(ell, c).expect("c > ℓ checked");
                hi = hi.min(bound.max(0) as usize);
            }
        }
    }
    if lo > hi {
        bump(&mut outcome.tallies, TALLY_WINDOW_EMPTY);
        return outcome;
    }

    let mut any_divisible = false;
    for n in lo..=hi {
        if !(n - t_total).is_multiple_of(ell + 1) {
            continue;
        }
        any_divisible = true;
        let star_copies = (n - t_total) / (ell + 1);
        let edges = set.edge_total() + star_copies * ell;
        if exotic_only && edges >= n {
            bump(&mut outcome.tallies, TALLY_EDGE_COUNT);
            continue;
        }
        let target = Rat::ratio(ell as i64, (n - ell - 1) as i64);
        if !set.matches_everywhere(n, &target) {
            bump(&mut outcome.tallies, TALLY_COB_MISMATCH);
            continue;
        }
        // Candidate acceptance: re-certify the fully assembled host
        // independently before reporting it.
        let host = set.assemble(ell, star_copies);
        let report = is_cobug(&host);
        assert!(
            report.is_cobug,
            "search acceptance contradicts certification for ℓ = {ell}, n = {n}"
        );
        bump(&mut outcome.tallies, TALLY_ACCEPTED);
        outcome.hits.push(SearchHit {
            graph6: write_graph6(&host).expect("desk-scale hosts encode"),
            ell,
            star_copies,
            host_vertices: n,
            report,
        });
    }
    if !any_divisible {
        bump(&mut outcome.tallies, TALLY_NO_DIVISIBLE_N);
    }
    outcome
}

/// Exhaustive scan of the configured candidate space. In the exotic regime
/// any hit would contradict the star-exclusion theorems; the result records
/// how every candidate was eliminated.
pub fn exotic_search(cfg: &SearchConfig) -> Result<SearchResult, SearchError> {
    let (survivors, mut tallies) = screened_components(cfg)?;

    let mut sets: Vec<CandidateSet<'_>> = Vec::new();
    for (i, part) in survivors.iter().enumerate() {
        sets.push(CandidateSet { parts: vec![part] });
        if cfg.max_nonstar_components >= 2 {
            for other in &survivors[i..] {
                sets.push(CandidateSet { parts: vec![part, other] });
            }
        }
    }

    let outcomes: Vec<WindowOutcome> = sets
        .par_iter()
        .flat_map_iter(|set| (cfg.ell_min..=cfg.ell_max).map(move |ell| (ell, set)))
        .map(|(ell, set)| scan_window(cfg, ell, set))
        .collect();

    let mut found = Vec::new();
    for outcome in outcomes {
        for (key, count) in outcome.tallies {
            *tallies.entry(key).or_insert(0) += count;
        }
        found.extend(outcome.hits);
    }
    found.sort_by(|a, b| (a.ell, &a.graph6).cmp(&(b.ell, &b.graph6)));

    // Soundness: every reported host re-certifies from its serialized form.
    for hit in &found {
        let host = crate::io::parse_graph6(&hit.graph6).expect("round-trip");
        let report = is_cobug(&host);
        assert!(report.is_cobug && report.betweenness == hit.report.betweenness);
    }

    Ok(SearchResult { config: cfg.clone(), found, pruned_counts: tallies, exhausted: true })
}

/// Reproduction of the per-ℓ star-exclusion arguments: the host-size window
/// that the excess, minimum-co-betweenness and closeness bounds leave open,
/// the forced closeness/excess ranges inside it, and the pinned search
/// outcome over that window.
#[derive(Clone, Debug, Serialize)]
pub struct StarExclusionReport {
    pub ell: usize,
    /// 3(ℓ+1) + 6: three star components plus a six-vertex non-star one.
    pub n_min: usize,
    /// Largest n with ℓ/(n-ℓ-1) ≥ 6/(n-4), if that inequality bounds n.
    pub n_max_min_cob: Option<usize>,
    /// Largest n allowed by the closeness bound over feasible c.
    pub n_max_closeness: Option<usize>,
    /// Closeness values c > ℓ that keep the window nonempty.
    pub feasible_closeness: Vec<usize>,
    /// Excess range forced by n ≥ (ex+1)(ℓ+1) + 6 within the window.
    pub max_excess: Option<i64>,
    pub window: Option<(usize, usize)>,
    pub search: SearchResult,
    pub no_exotic_cobug: bool,
}

pub fn verify_star_exclusion(ell: usize, cap: usize) -> Result<StarExclusionReport, SearchError> {
    let n_min = 3 * (ell + 1) + 6;

    // Star vertices have coB = ℓ/(n-ℓ-1); some non-star vertex has
    // coB ≥ 6/(n-4). Find the largest n reconciling the two, if any.
    let mut n_max_min_cob = None;
    if ell < 6 {
        // ℓ(n-4) ≥ 6(n-ℓ-1)  ⟺  n(ℓ-6) ≥ 4ℓ - 6ℓ - 6  ⟺  n ≤ (2ℓ+6)/(6-ℓ).
        n_max_min_cob = Some((2 * ell + 6) / (6 - ell));
    }

    // The closeness bound n ≤ ⌊(c(ℓ+1)-4ℓ)/(c-ℓ)⌋ for each c > ℓ; collect
    // the c values whose bound clears n_min.
    let mut feasible_closeness = Vec::new();
    let mut n_max_closeness: Option<usize> = None;
    let c_limit = 2 * cap * (cap.saturating_sub(1)); // above any c a cap-sized component allows
    for c in ell + 1..=(ell + 1).max(c_limit) {
        let bound = closeness_bound(ell, c).expect("c > ℓ");
        if bound >= n_min as i64 {
            feasible_closeness.push(c);
            let bound = bound as usize;
            n_max_closeness = Some(n_max_closeness.map_or(bound, |b: usize| b.max(bound)));
        }
    }

    let window_hi = match (n_max_min_cob, n_max_closeness) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (Some(a), None) => Some(a),
        (None, b) => b,
    };
    let window = window_hi.filter(|&hi| hi >= n_min).map(|hi| (n_min, hi));

    // Excess: n ≥ (ex+1)(ℓ+1) + 6 bounds ex within the window.
    let max_excess = window.map(|(_, hi)| ((hi - 6) / (ell + 1)) as i64 - 1);

    let mut cfg = SearchConfig::exotic(ell, ell, cap);
    if let Some((_, hi)) = window {
        cfg.n_cap = hi;
    }
    let search = exotic_search(&cfg)?;
    let no_exotic_cobug = search.found.is_empty();
    Ok(StarExclusionReport {
        ell,
        n_min,
        n_max_min_cob,
        n_max_closeness,
        feasible_closeness,
        max_excess,
        window,
        search,
        no_exotic_cobug,
    })
}

/// Every connected BUG on up to `n_max` vertices with its exact value.
pub fn exhaustive_bug_scan(n_max: usize) -> Result<Vec<(Graph, Rat)>, SearchError> {
    let mut found = Vec::new();
    for n in 1..=n_max {
        let classes = connected_graphs(n)?;
        let hits: Vec<(Graph, Rat)> = classes
            .into_par_iter()
            .filter_map(|g| {
                let value = is_bug(&g).expect("enumerated graphs are connected");
                value.map(|v| (g, v))
            })
            .collect();
        found.extend(hits);
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, complete_multipartite, cycle_graph};

    #[test]
    fn no_candidates_below_six_vertices() {
        let cfg = SearchConfig::exotic(0, 8, 5);
        let (survivors, tallies) = candidate_components(&cfg).unwrap();
        assert!(survivors.is_empty());
        assert!(!tallies.contains_key(TALLY_SURVIVED));
        // 1 + 1 + 2 + 6 + 21 enumerated components all accounted for.
        assert_eq!(tallies.values().sum::<u64>(), 31);
    }

    #[test]
    fn cycles_and_k24_are_pruned_as_uniform() {
        for g in [cycle_graph(6), cycle_graph(7), complete_multipartite(&[2, 4])] {
            match screen_component(g, true) {
                ComponentScreen::Pruned(key) => {
                    assert!(key == TALLY_UNIFORM || key == TALLY_CLOSE_INCLUSION)
                }
                ComponentScreen::Survived(c) => panic!("{:?} survived", c.graph),
            }
        }
        // C6 specifically dies as uniform (its close sets are all equal).
        assert!(matches!(
            screen_component(cycle_graph(6), true),
            ComponentScreen::Pruned(TALLY_UNIFORM)
        ));
    }

    #[test]
    fn small_exotic_search_is_empty_and_accounted() {
        let cfg = SearchConfig::exotic(0, 4, 6);
        let result = exotic_search(&cfg).unwrap();
        assert!(result.found.is_empty());
        assert!(result.exhausted);
        let components: u64 = result
            .pruned_counts
            .iter()
            .filter(|(k, _)| k.starts_with("component:"))
            .map(|(_, &v)| v)
            .sum();
        assert_eq!(components, 143); // 1+1+2+6+21+112 enumerated classes
        let survived = result.pruned_counts.get(TALLY_SURVIVED).copied().unwrap_or(0);
        let configs: u64 = result
            .pruned_counts
            .iter()
            .filter(|(k, _)| k.starts_with("config:"))
            .map(|(_, &v)| v)
            .sum();
        // Each of the 5 star sizes contributes at least one tally per
        // surviving candidate.
        assert!(configs >= survived * 5, "every (ℓ, candidate) pair accounted");
    }

    #[test]
    fn completeness_up_to_l12_cap8() {
        let cfg = SearchConfig::exotic(0, 12, 8);
        let result = exotic_search(&cfg).unwrap();
        assert!(result.found.is_empty());
        let components: u64 = result
            .pruned_counts
            .iter()
            .filter(|(k, _)| k.starts_with("component:"))
            .map(|(_, &v)| v)
            .sum();
        assert_eq!(components, 12_113); // Σ connected classes, n = 1..8
        assert_eq!(result.pruned_counts.get(TALLY_SURVIVED), Some(&156));
        let configs: u64 = result
            .pruned_counts
            .iter()
            .filter(|(k, _)| k.starts_with("config:"))
            .map(|(_, &v)| v)
            .sum();
        assert!(configs >= 156 * 13);
    }

    #[test]
    fn ge_one_regime_finds_k4_minus_with_star() {
        let cfg = SearchConfig {
            ell_min: 4,
            ell_max: 4,
            component_vertex_cap: 4,
            n_cap: 9,
            max_nonstar_components: 1,
            corpus: None,
            allow_betweenness_ge_one: true,
        };
        let result = exotic_search(&cfg).unwrap();
        let hit = result
            .found
            .iter()
            .find(|h| h.host_vertices == 9 && h.star_copies == 1)
            .expect("K4 minus an edge with K_{1,4} shows up");
        assert!(hit.report.is_cobug);
        assert_eq!(hit.report.betweenness, Some(Rat::one()));
        assert!(!hit.report.exotic);
    }

    #[test]
    fn pairs_mode_keeps_accounting_and_finds_single_hit() {
        // With two non-star components allowed, the single K4-minus-an-edge
        // hit must still be the only acceptance; pair configurations are
        // tallied and rejected.
        let cfg = SearchConfig {
            ell_min: 4,
            ell_max: 4,
            component_vertex_cap: 4,
            n_cap: 30,
            max_nonstar_components: 2,
            corpus: None,
            allow_betweenness_ge_one: true,
        };
        let result = exotic_search(&cfg).unwrap();
        assert_eq!(result.found.len(), 1);
        assert_eq!(result.found[0].host_vertices, 9);
        let survived = result.pruned_counts[TALLY_SURVIVED];
        let sets = survived + survived * (survived + 1) / 2;
        let configs: u64 = result
            .pruned_counts
            .iter()
            .filter(|(k, _)| k.starts_with("config:"))
            .map(|(_, &v)| v)
            .sum();
        assert!(configs >= sets, "every candidate set reaches the window scan");
    }

    #[test]
    fn pairs_mode_exotic_regime_stays_empty() {
        let mut cfg = SearchConfig::exotic(0, 8, 7);
        cfg.max_nonstar_components = 2;
        let result = exotic_search(&cfg).unwrap();
        assert!(result.found.is_empty());
        assert!(result.exhausted);
    }

    #[test]
    fn window_lower_bound_enforces_three_stars() {
        let cfg = SearchConfig::exotic(3, 3, 6);
        let comp = CandidateComponent::new(complete_graph(6));
        let set = CandidateSet { parts: vec![&comp] };
        let outcome = scan_window(&cfg, 3, &set);
        // Window starts at 6 + 3·4 = 18, beyond every upper bound here.
        assert!(outcome.hits.is_empty());
        assert_eq!(outcome.tallies.get(TALLY_WINDOW_EMPTY), Some(&1));
    }

    #[test]
    fn star_exclusion_windows_for_small_ell() {
        // ℓ ≤ 4: the min-co-betweenness bound caps n at (2ℓ+6)/(6-ℓ) ≤ 7,
        // below the 3ℓ+9 floor.
        for ell in 0..=4 {
            let report = verify_star_exclusion(ell, 6).unwrap();
            assert_eq!(report.n_max_min_cob, Some((2 * ell + 6) / (6 - ell)));
            assert!(report.window.is_none());
            assert!(report.no_exotic_cobug);
        }
        // ℓ = 5: n ≤ 16 < 24.
        let report = verify_star_exclusion(5, 6).unwrap();
        assert_eq!(report.n_max_min_cob, Some(16));
        assert!(report.window.is_none());
        // ℓ = 6: closeness corollary gives 25 < 27.
        let report = verify_star_exclusion(6, 6).unwrap();
        assert_eq!(report.n_max_min_cob, None);
        assert_eq!(report.n_max_closeness, None);
        assert!(report.window.is_none());
    }

    #[test]
    fn star_exclusion_forced_parameters_for_ell_7_and_8() {
        let report = verify_star_exclusion(7, 6).unwrap();
        // c ≥ 9 would force n ≤ 22 < 30; only c = 8 stays feasible, with
        // window [30, 36] and excess forced to 2.
        assert_eq!(report.feasible_closeness, vec![8]);
        assert_eq!(report.window, Some((30, 36)));
        assert_eq!(report.max_excess, Some(2));
        assert!(report.no_exotic_cobug);

        let report = verify_star_exclusion(8, 6).unwrap();
        assert_eq!(report.feasible_closeness, vec![9]);
        assert_eq!(report.window, Some((33, 49)));
        assert_eq!(report.max_excess, Some(3));
        assert!(report.no_exotic_cobug);
    }

    #[test]
    fn bug_scan_lists_complete_graphs_at_zero() {
        let scan = exhaustive_bug_scan(5).unwrap();
        let zeros: Vec<_> = scan.iter().filter(|(_, v)| v.is_zero()).collect();
        assert_eq!(zeros.len(), 5); // K_1 .. K_5
        for (g, _) in zeros {
            let n = g.vertex_count();
            assert_eq!(g.edge_count(), n * (n - 1) / 2);
        }
        // No BUG value inside (0, 1/2).
        let half = Rat::ratio(1, 2);
        assert!(scan.iter().all(|(_, v)| v.is_zero() || *v >= half));
    }
}
