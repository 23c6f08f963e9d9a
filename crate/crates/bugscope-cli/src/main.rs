//! `bugscope`: analyze, certify, construct, search and verify
//! betweenness-uniform graphs and their complements, with JSON reports.
//!
//! Exit codes: 0 success, 1 certification-negative (an `--expect-*` flag
//! failed), 2 input error, 3 cap exceeded.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use bugscope::centrality::{betweenness_exact, CentralityError};
use bugscope::constructions::{
    cycles_cobug, family_above_one, inflated_cycles_cobug, multipartite_plus_stars, stars_cobug,
    Construction,
};
use bugscope::enumerate::EnumError;
use bugscope::graph::Graph;
use bugscope::io::{read_graph_file, write_edge_list, write_graph6, IoError};
use bugscope::lens::is_cobug;
use bugscope::rational::Rat;
use bugscope::search::{exhaustive_bug_scan, exotic_search, SearchConfig, SearchError};
use bugscope::structure::structural_filters;
use bugscope::verify::lemma_suite;

const SCHEMA: &str = "bugscope/1";

/// Stop writing graph6 once the body would exceed ~100 MB; the format is
/// dense and the edge-list writer handles sparse hosts of any size.
const MAX_GRAPH6_VERTICES: usize = 40_000;

#[derive(Parser)]
#[command(name = "bugscope", version, about = "Exact BUG/coBUG certification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format; text is a human-readable projection of the JSON.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Force single-threaded execution for bit-exact log ordering.
    #[arg(long, global = true)]
    deterministic: bool,
    /// Worker threads (defaults to the available cores).
    #[arg(long, global = true)]
    parallelism: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Exact betweenness of a connected graph (graph6 or edge-list file).
    Analyze { path: PathBuf },
    /// Certify whether a host graph is a coBUG.
    Certify(CertifyArgs),
    /// Generate one of the known coBUG families.
    Construct(ConstructArgs),
    /// Exhaustive search for exotic coBUGs in a configured window.
    Search(SearchArgs),
    /// Re-verify every structural lemma exhaustively at desk scale.
    VerifyLemmas(VerifyArgs),
    /// List every connected BUG up to a vertex cap with its exact value.
    Scan(ScanArgs),
}

#[derive(Args)]
struct CertifyArgs {
    path: PathBuf,
    /// Exit 1 unless the graph certifies as a coBUG.
    #[arg(long)]
    expect_cobug: bool,
    /// Exit 1 unless the graph certifies as an exotic coBUG.
    #[arg(long)]
    expect_exotic: bool,
    /// Exit 1 unless the certified betweenness equals this value (e.g. 13/4).
    #[arg(long, value_name = "P/Q")]
    expect_betweenness: Option<String>,
    /// Evaluate structural filters per non-star component.
    #[arg(long)]
    structure: bool,
}

#[derive(Args)]
struct ConstructArgs {
    /// stars | cycles | multipartite | above-one | inflated
    family: String,
    /// Family parameters: "stars k l", "cycles l1,l2,...",
    /// "multipartite p1,p2,...", "above-one t", "inflated l1,l2,...".
    params: Vec<String>,
    /// Write the graph here (.g6 for graph6, anything else edge-list).
    #[arg(long, short = 'o')]
    graph_out: Option<PathBuf>,
    /// Also certify the generated graph.
    #[arg(long)]
    certify: bool,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, default_value_t = 0)]
    l_min: usize,
    #[arg(long, default_value_t = 8)]
    l_max: usize,
    /// Largest candidate non-star component size.
    #[arg(long, default_value_t = 8)]
    component_cap: usize,
    /// Host size ceiling; defaults to the closeness bound (l_max+1)^2 - 4*l_max.
    #[arg(long)]
    n_cap: Option<usize>,
    /// 1 or 2 non-star components per host.
    #[arg(long, default_value_t = 1)]
    max_nonstar: usize,
    /// graph6 file of candidate components (replaces the built-in enumerator).
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Also admit hosts with betweenness >= 1 (relaxes the exotic filters).
    #[arg(long)]
    allow_ge_one: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 7)]
    n_max: usize,
    #[arg(long, default_value_t = 8)]
    l_max: usize,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long, default_value_t = 7)]
    n_max: usize,
}

/// An error plus the process exit code it maps to.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn cap(message: impl Into<String>) -> Self {
        Failure { code: 3, message: message.into() }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        match e {
            IoError::TooLarge(_) => Failure::cap(e.to_string()),
            _ => Failure::input(e.to_string()),
        }
    }
}

impl From<EnumError> for Failure {
    fn from(e: EnumError) -> Self {
        Failure::cap(e.to_string())
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::Corpus(inner) => inner.into(),
            SearchError::Enum(_) | SearchError::CapNeedsCorpus(_) => Failure::cap(e.to_string()),
        }
    }
}

impl From<CentralityError> for Failure {
    fn from(e: CentralityError) -> Self {
        match e {
            CentralityError::Disconnected => Failure::input(e.to_string()),
            CentralityError::OracleCap(_) => Failure::cap(e.to_string()),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let threads = if cli.deterministic { Some(1) } else { cli.parallelism };
    if let Some(threads) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .expect("thread pool is configured once at startup");
    }
    let started = Instant::now();
    match run(&cli.command) {
        Ok((name, payload, expect_failed)) => {
            let envelope = json!({
                "schema": SCHEMA,
                "command": name,
                "elapsed_ms": started.elapsed().as_millis() as u64,
                "report": payload,
            });
            let rendered = match cli.format {
                Format::Json => serde_json::to_string_pretty(&envelope).unwrap(),
                Format::Text => render_text(name, &envelope["report"]),
            };
            match &cli.output {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, rendered + "\n") {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        std::process::exit(2);
                    }
                }
                None => println!("{rendered}"),
            }
            std::process::exit(if expect_failed { 1 } else { 0 });
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            std::process::exit(failure.code);
        }
    }
}

/// Returns the command name, the report payload, and whether an `--expect-*`
/// flag failed.
fn run(command: &Command) -> Result<(&'static str, Value, bool), Failure> {
    match command {
        Command::Analyze { path } => {
            let g = read_graph_file(path)?;
            let profile = betweenness_exact(&g)?;
            let payload = json!({
                "vertices": g.vertex_count(),
                "edges": g.edge_count(),
                "per_vertex": profile.per_vertex.iter().map(Rat::to_string).collect::<Vec<_>>(),
                "average": profile.average.to_string(),
                "is_uniform": profile.is_uniform,
            });
            Ok(("analyze", payload, false))
        }
        Command::Certify(args) => {
            let g = read_graph_file(&args.path)?;
            let report = is_cobug(&g);
            let mut payload = serde_json::to_value(&report).unwrap();
            if args.structure {
                payload["structure"] = structure_verdicts(&g);
            }
            let mut failed = false;
            if args.expect_cobug && !report.is_cobug {
                failed = true;
            }
            if args.expect_exotic && !report.exotic {
                failed = true;
            }
            if let Some(expected) = &args.expect_betweenness {
                let expected: Rat = expected
                    .parse()
                    .map_err(|e| Failure::input(format!("--expect-betweenness: {e}")))?;
                if report.betweenness.as_ref() != Some(&expected) {
                    failed = true;
                }
            }
            Ok(("certify", payload, failed))
        }
        Command::Construct(args) => {
            let construction = build_family(args)?;
            let graph = &construction.graph;
            let mut payload = serde_json::to_value(&construction.spec).unwrap();
            payload["vertices"] = json!(graph.vertex_count());
            payload["edges"] = json!(graph.edge_count());
            if let Some(path) = &args.graph_out {
                write_graph(graph, path)?;
                payload["written_to"] = json!(path.display().to_string());
            }
            if args.certify {
                let report = is_cobug(graph);
                let ok = report.is_cobug
                    && report.betweenness.as_ref()
                        == Some(&construction.spec.predicted_betweenness);
                payload["certification"] = serde_json::to_value(&report).unwrap();
                payload["prediction_confirmed"] = json!(ok);
            }
            Ok(("construct", payload, false))
        }
        Command::Search(args) => {
            if args.max_nonstar == 0 || args.max_nonstar > 2 {
                return Err(Failure::input("--max-nonstar must be 1 or 2"));
            }
            let mut cfg = SearchConfig::exotic(args.l_min, args.l_max, args.component_cap);
            if let Some(n_cap) = args.n_cap {
                cfg.n_cap = n_cap;
            }
            cfg.max_nonstar_components = args.max_nonstar;
            cfg.corpus = args.corpus.clone();
            cfg.allow_betweenness_ge_one = args.allow_ge_one;
            let result = exotic_search(&cfg)?;
            Ok(("search", serde_json::to_value(&result).unwrap(), false))
        }
        Command::VerifyLemmas(args) => {
            let reports = lemma_suite(args.n_max, args.l_max)?;
            Ok(("verify-lemmas", serde_json::to_value(&reports).unwrap(), false))
        }
        Command::Scan(args) => {
            let scan = exhaustive_bug_scan(args.n_max)?;
            let bugs: Vec<Value> = scan
                .iter()
                .map(|(g, value)| {
                    json!({
                        "graph6": write_graph6(g).expect("small graph encodes"),
                        "vertices": g.vertex_count(),
                        "betweenness": value.to_string(),
                    })
                })
                .collect();
            Ok(("scan", json!({ "count": bugs.len(), "bugs": bugs }), false))
        }
    }
}

fn structure_verdicts(g: &Graph) -> Value {
    let inventory = g.components();
    let verdicts: Vec<Value> = inventory
        .components
        .iter()
        .map(|c| {
            if c.star.is_some() {
                Value::Null
            } else {
                let sub = g.induced_subgraph(&c.vertices);
                let verdict = structural_filters(&sub).expect("non-star component");
                serde_json::to_value(&verdict).unwrap()
            }
        })
        .collect();
    Value::Array(verdicts)
}

fn parse_list(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| Failure::input(format!("bad integer {part:?} in {s:?}")))
        })
        .collect()
}

fn build_family(args: &ConstructArgs) -> Result<Construction, Failure> {
    let params = &args.params;
    let usage = |msg: &str| Failure::input(format!("{}: usage: {msg}", args.family));
    let construction = match args.family.as_str() {
        "stars" => {
            if params.len() != 2 {
                return Err(usage("stars <k> <l>"));
            }
            let k = parse_list(&params[0])?[0];
            let l = parse_list(&params[1])?[0];
            stars_cobug(k, l)
        }
        "cycles" => {
            if params.len() != 1 {
                return Err(usage("cycles <l1,l2,...>"));
            }
            cycles_cobug(&parse_list(&params[0])?)
        }
        "multipartite" => {
            if params.len() != 1 {
                return Err(usage("multipartite <p1,p2,...>"));
            }
            multipartite_plus_stars(&parse_list(&params[0])?)
        }
        "above-one" => {
            if params.len() != 1 {
                return Err(usage("above-one <t>"));
            }
            family_above_one(parse_list(&params[0])?[0])
        }
        "inflated" => {
            if params.len() != 1 {
                return Err(usage("inflated <l1,l2,...> (lengths summing to 721)"));
            }
            inflated_cycles_cobug(&parse_list(&params[0])?)
        }
        other => {
            return Err(Failure::input(format!(
                "unknown family {other:?} (stars, cycles, multipartite, above-one, inflated)"
            )))
        }
    };
    construction.map_err(|e| Failure::input(e.to_string()))
}

fn write_graph(g: &Graph, path: &PathBuf) -> Result<(), Failure> {
    let graph6 = path.extension().is_some_and(|e| e == "g6");
    let content = if graph6 {
        if g.vertex_count() > MAX_GRAPH6_VERTICES {
            return Err(Failure::cap(format!(
                "{} vertices is too dense for graph6 output; use an edge-list extension",
                g.vertex_count()
            )));
        }
        write_graph6(g)? + "\n"
    } else {
        write_edge_list(g)
    };
    std::fs::write(path, content)
        .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display())))
}

fn unquoted(v: &Value) -> String {
    match v.as_str() {
        Some(s) => s.to_string(),
        None => v.to_string(),
    }
}

fn render_text(command: &str, report: &Value) -> String {
    let mut out = Vec::new();
    match command {
        "analyze" => {
            out.push(format!(
                "vertices {}  edges {}",
                report["vertices"], report["edges"]
            ));
            out.push(format!("average betweenness {}", unquoted(&report["average"])));
            out.push(format!("uniform {}", report["is_uniform"]));
        }
        "certify" => {
            out.push(format!("coBUG {}", report["is_cobug"]));
            out.push(format!("betweenness {}", unquoted(&report["betweenness"])));
            out.push(format!(
                "exotic {} ({})",
                report["exotic"],
                report["exotic_reason"].as_str().unwrap_or("")
            ));
            out.push(format!("components {}", report["components"].as_array().map_or(0, Vec::len)));
            if let Some(v) = report["violations"].as_array() {
                if !v.is_empty() {
                    out.push(format!("violations {v:?}"));
                }
            }
        }
        "construct" => {
            out.push(format!(
                "family {} parameters {}",
                report["family"], report["parameters"]
            ));
            out.push(format!(
                "vertices {} edges {} predicted {}",
                report["vertices"], report["edges"], report["predicted_betweenness"]
            ));
            if let Some(ok) = report.get("prediction_confirmed") {
                out.push(format!("prediction confirmed {ok}"));
            }
        }
        "search" => {
            out.push(format!(
                "found {} exhausted {}",
                report["found"].as_array().map_or(0, Vec::len),
                report["exhausted"]
            ));
            if let Some(counts) = report["pruned_counts"].as_object() {
                for (k, v) in counts {
                    out.push(format!("  {k}: {v}"));
                }
            }
        }
        "verify-lemmas" => {
            if let Some(reports) = report.as_array() {
                for r in reports {
                    let status = if r["passed"].as_bool().unwrap_or(false) {
                        "PASS"
                    } else {
                        "FAIL"
                    };
                    out.push(format!(
                        "{status} {} (checked {})",
                        r["name"].as_str().unwrap_or("?"),
                        r["checked"]
                    ));
                    if let Some(cex) = r["counterexample"].as_str() {
                        out.push(format!("  counterexample {cex}"));
                    }
                }
            }
        }
        "scan" => {
            out.push(format!("bugs {}", report["count"]));
            if let Some(bugs) = report["bugs"].as_array() {
                for b in bugs {
                    out.push(format!(
                        "  {} n={} B={}",
                        b["graph6"].as_str().unwrap_or("?"),
                        b["vertices"],
                        unquoted(&b["betweenness"])
                    ));
                }
            }
        }
        _ => out.push(report.to_string()),
    }
    out.join("\n")
}
