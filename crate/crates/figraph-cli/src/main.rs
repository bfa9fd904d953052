//! `figraph`: validate, expand, solve, scan, fit, sweep and verify
//! classification-graph families from the command line.
//!
//! Exit codes: 0 success; 1 domain error (structured JSON on stderr);
//! 2 budget exhaustion with partial results written.
//! `FIGRAPH_THREADS` caps row-level parallelism inside scans and sweeps.

use clap::{Parser, Subcommand, ValueEnum};
use figraph::analysis::{check_trends, detect_recurrence, fit_quasi_polynomial, FitError};
use figraph::expand::{expand, ConcreteGraph};
use figraph::ideals::{check_dim_equals_alpha, edge_ideal};
use figraph::model::{parse, random, ClassificationGraph, CountRange, Family, RandomGenParams};
use figraph::solver::{max_independent_set, scan_alpha, AlphaSequence, Budget, RowStatus};
use figraph::verify::Suite;
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

#[derive(Parser)]
#[command(
    name = "figraph",
    version,
    about = "Classification graphs of nested symmetric graph families: expansion, exact independence numbers, edge ideals, quasi-polynomial fits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Csv,
    Json,
    Dimacs,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a classification graph document.
    Validate { file: PathBuf },
    /// Expand a classification graph at a given n and emit the graph.
    Expand {
        file: PathBuf,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact maximum independent set of one graph (a classification
    /// document expanded at --n, or a raw DIMACS/JSON graph).
    Alpha {
        file: PathBuf,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        budget_nodes: Option<u64>,
        #[arg(long)]
        budget_secs: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Scan alpha over a range of n and write the sequence.
    Scan {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        n_min: u32,
        #[arg(long, default_value_t = 12)]
        n_max: u32,
        #[arg(long, default_value_t = 10_000_000)]
        budget_nodes: u64,
        #[arg(long, default_value_t = 60)]
        budget_secs: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fit a quasi-polynomial and a linear recurrence to a scanned
    /// sequence (CSV or JSON).
    Fit {
        seq_file: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_period: u32,
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate random classification graphs, scan and fit each, and emit
    /// a summary table with trend verdicts.
    RandomSweep {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        count: u32,
        #[arg(long, default_value_t = 12)]
        n_max: u32,
        #[arg(long, default_value_t = 2)]
        max_pairs: u32,
        #[arg(long, default_value_t = 1)]
        max_linears: u32,
        #[arg(long, default_value_t = 1)]
        max_singletons: u32,
        #[arg(long, default_value_t = 0.5)]
        edge_prob: f64,
        #[arg(long, default_value_t = 10_000_000)]
        budget_nodes: u64,
        #[arg(long, default_value_t = 60)]
        budget_secs: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite: known-families | trends | lemmas |
    /// oracle | structural | all.
    Verify { suite: String },
    /// Edge ideal presentation (and Krull dimension) of a graph.
    Ideal {
        file: PathBuf,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the classification graph of a named family.
    Family {
        /// e.g. kneser2, johnson2, copies-of-kneser2:2,
        /// disjoint-union:2:johnson2
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

// ============================================================================
// Errors, exit codes, manifests
// ============================================================================

#[derive(Debug)]
struct CliError {
    kind: &'static str,
    message: String,
}

impl CliError {
    fn new(kind: &'static str, message: impl ToString) -> CliError {
        CliError {
            kind,
            message: message.to_string(),
        }
    }
}

type CliResult = Result<ExitCode, CliError>;

#[derive(Serialize)]
struct RunManifest {
    tool: &'static str,
    version: &'static str,
    command: Vec<String>,
    seeds: Vec<u64>,
    input_digests: BTreeMap<String, String>,
    /// Unix timestamp (seconds); the only field expected to vary between
    /// reruns of an identical command.
    timestamp: u64,
}

impl RunManifest {
    fn collect(inputs: &[&Path], seeds: &[u64]) -> RunManifest {
        let mut input_digests = BTreeMap::new();
        for path in inputs {
            if let Ok(bytes) = fs::read(path) {
                let mut hasher = Sha256::new();
                hasher.update(&bytes);
                let digest = hasher.finalize();
                let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
                input_digests.insert(path.display().to_string(), hex);
            }
        }
        RunManifest {
            tool: "figraph",
            version: env!("CARGO_PKG_VERSION"),
            command: std::env::args().collect(),
            seeds: seeds.to_vec(),
            input_digests,
            timestamp: std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        }
    }
}

/// Writes `content` to `out` (or stdout) and, for file output, the run
/// manifest next to it as `<out>.manifest.json`.
fn emit(out: &Option<PathBuf>, content: &str, manifest: &RunManifest) -> Result<(), CliError> {
    match out {
        None => {
            print!("{content}");
            if !content.ends_with('\n') {
                println!();
            }
            Ok(())
        }
        Some(path) => {
            fs::write(path, content)
                .map_err(|e| CliError::new("io", format!("{}: {e}", path.display())))?;
            let manifest_path = {
                let mut name = path.as_os_str().to_owned();
                name.push(".manifest.json");
                PathBuf::from(name)
            };
            let body = serde_json::to_string_pretty(manifest).expect("manifest serializes");
            fs::write(&manifest_path, body)
                .map_err(|e| CliError::new("io", format!("{}: {e}", manifest_path.display())))?;
            Ok(())
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::new("io", format!("{}: {e}", path.display())))
}

/// A graph input: either a classification document (expanded on demand) or
/// a raw graph in DIMACS / graph-JSON form.
enum Input {
    Classification(ClassificationGraph),
    Graph(ConcreteGraph),
}

fn read_input(path: &Path) -> Result<Input, CliError> {
    let text = read_file(path)?;
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') && trimmed.contains("\"orbits\"") {
        let c = parse(text.as_bytes()).map_err(|e| CliError::new("parse", e))?;
        return Ok(Input::Classification(c));
    }
    figraph::graph_io::read_auto(&text)
        .map(Input::Graph)
        .map_err(|e| CliError::new("parse", e))
}

fn graph_from_input(path: &Path, n: Option<u32>) -> Result<(ConcreteGraph, String), CliError> {
    match read_input(path)? {
        Input::Classification(c) => {
            let n = n.ok_or_else(|| {
                CliError::new("usage", "--n is required for classification-graph inputs")
            })?;
            let g = expand(&c, n).map_err(|e| CliError::new("invalid", e))?;
            Ok((g, format!("expanded at n = {n}")))
        }
        Input::Graph(g) => Ok((g, "raw graph input".to_string())),
    }
}

fn budget_from(nodes: Option<u64>, secs: Option<u64>) -> Budget {
    Budget::new(nodes, secs.map(Duration::from_secs))
}

// ============================================================================
// Subcommand bodies
// ============================================================================

fn cmd_validate(file: &Path) -> CliResult {
    let text = read_file(file)?;
    let c = parse(text.as_bytes()).map_err(|e| CliError::new("validate", e))?;
    let (p, l, s) = c.orbit_counts();
    println!(
        "ok: {} orbit(s) ({p} pair, {l} linear, {s} singleton), {} loop(s), {} edge(s); digest {}",
        c.orbits().len(),
        c.loops().len(),
        c.edges().len(),
        c.digest()
    );
    Ok(ExitCode::SUCCESS)
}

fn render_graph_text(g: &ConcreteGraph) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "graph: {} vertices, {} edges (n = {})\n",
        g.vertex_count(),
        g.edge_count(),
        g.n()
    ));
    for (i, label) in g.vertices().iter().enumerate() {
        out.push_str(&format!("v {i} {}\n", label.render()));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

fn cmd_expand(file: &Path, n: u32, format: Format, out: &Option<PathBuf>) -> CliResult {
    let text = read_file(file)?;
    let c = parse(text.as_bytes()).map_err(|e| CliError::new("parse", e))?;
    let g = expand(&c, n).map_err(|e| CliError::new("invalid", e))?;
    let content = match format {
        Format::Dimacs => figraph::graph_io::write_dimacs(&g),
        Format::Json => figraph::graph_io::write_json(&g),
        Format::Text => render_graph_text(&g),
        Format::Csv => return Err(CliError::new("usage", "expand has no CSV form")),
    };
    let manifest = RunManifest::collect(&[file], &[]);
    emit(out, &content, &manifest)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_alpha(
    file: &Path,
    n: Option<u32>,
    budget_nodes: Option<u64>,
    budget_secs: Option<u64>,
    format: Format,
    out: &Option<PathBuf>,
) -> CliResult {
    let (g, note) = graph_from_input(file, n)?;
    let budget = budget_from(budget_nodes, budget_secs);
    let manifest = RunManifest::collect(&[file], &[]);

    #[derive(Serialize)]
    struct AlphaDoc {
        exact: bool,
        alpha: usize,
        upper_bound: Option<usize>,
        vertices: usize,
        edges: usize,
        nodes_explored: u64,
        millis: u128,
        witness: Vec<String>,
    }

    let (doc, exit) = match max_independent_set(&g, budget) {
        Ok(res) => (
            AlphaDoc {
                exact: true,
                alpha: res.alpha,
                upper_bound: None,
                vertices: g.vertex_count(),
                edges: g.edge_count(),
                nodes_explored: res.nodes_explored,
                millis: res.elapsed.as_millis(),
                witness: res.witness.iter().map(|&v| g.label(v).render()).collect(),
            },
            ExitCode::SUCCESS,
        ),
        Err(exceeded) => (
            AlphaDoc {
                exact: false,
                alpha: exceeded.lower_bound,
                upper_bound: Some(exceeded.upper_bound),
                vertices: g.vertex_count(),
                edges: g.edge_count(),
                nodes_explored: exceeded.nodes_explored,
                millis: exceeded.elapsed.as_millis(),
                witness: exceeded
                    .lower_witness
                    .iter()
                    .map(|&v| g.label(v).render())
                    .collect(),
            },
            ExitCode::from(2),
        ),
    };

    let content = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&doc).expect("doc serializes");
            s.push('\n');
            s
        }
        _ => {
            let mut s = String::new();
            if doc.exact {
                s.push_str(&format!("alpha = {}\n", doc.alpha));
            } else {
                s.push_str(&format!(
                    "budget exceeded: alpha in [{}, {}]\n",
                    doc.alpha,
                    doc.upper_bound.unwrap_or(doc.vertices)
                ));
            }
            s.push_str(&format!(
                "vertices = {}, edges = {}, nodes = {}, millis = {} ({note})\n",
                doc.vertices, doc.edges, doc.nodes_explored, doc.millis
            ));
            s.push_str(&format!("witness: {}\n", doc.witness.join(" ")));
            s
        }
    };
    emit(out, &content, &manifest)?;
    Ok(exit)
}

fn cmd_scan(
    file: &Path,
    n_min: u32,
    n_max: u32,
    budget_nodes: u64,
    budget_secs: u64,
    format: Format,
    out: &Option<PathBuf>,
) -> CliResult {
    let text = read_file(file)?;
    let c = parse(text.as_bytes()).map_err(|e| CliError::new("parse", e))?;
    let budget = budget_from(Some(budget_nodes), Some(budget_secs));
    let seq = scan_alpha(&c, n_min, n_max, budget).map_err(|e| CliError::new("scan", e))?;
    let content = match format {
        Format::Csv => seq.to_csv(),
        Format::Json => seq.to_json(),
        Format::Text => {
            let mut s = String::new();
            for r in &seq.rows {
                s.push_str(&format!(
                    "n = {:>3}  alpha = {:>6}{}\n",
                    r.n,
                    r.alpha,
                    if r.is_complete() { "" } else { " (lower bound)" }
                ));
            }
            s
        }
        Format::Dimacs => return Err(CliError::new("usage", "scan has no DIMACS form")),
    };
    let manifest = RunManifest::collect(&[file], &[]);
    emit(out, &content, &manifest)?;
    let exhausted = seq.rows.iter().any(|r| r.status == RowStatus::Budget);
    Ok(if exhausted {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}

fn load_sequence(path: &Path) -> Result<AlphaSequence, CliError> {
    let text = read_file(path)?;
    if text.trim_start().starts_with('{') {
        AlphaSequence::from_json(&text).map_err(|e| CliError::new("parse", e))
    } else {
        AlphaSequence::from_csv(&text).map_err(|e| CliError::new("parse", e))
    }
}

fn cmd_fit(
    seq_file: &Path,
    max_period: u32,
    max_degree: u32,
    format: Format,
    out: &Option<PathBuf>,
) -> CliResult {
    let seq = load_sequence(seq_file)?;
    let fit =
        fit_quasi_polynomial(&seq, max_period, max_degree).map_err(|e| CliError::new("fit", e))?;
    let recurrence = detect_recurrence(&seq);

    #[derive(Serialize)]
    struct FitDoc {
        period: u32,
        degree: usize,
        stable_degree: i64,
        points_confirmed_per_class: usize,
        pieces: Vec<String>,
        recurrence_order: Option<usize>,
        recurrence: Option<String>,
        denominator: Option<String>,
    }
    let doc = FitDoc {
        period: fit.period,
        degree: fit.degree(),
        stable_degree: fit.stable_degree,
        points_confirmed_per_class: fit.points_confirmed_per_class,
        pieces: fit.pieces.iter().map(|p| p.display("n")).collect(),
        recurrence_order: recurrence.as_ref().ok().map(|r| r.order),
        recurrence: recurrence.as_ref().ok().map(|r| r.describe()),
        denominator: recurrence.as_ref().ok().map(|r| r.denominator.display("t")),
    };

    let content = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&doc).expect("doc serializes");
            s.push('\n');
            s
        }
        _ => {
            let mut s = format!("{}\n", fit.describe());
            match &recurrence {
                Ok(r) => s.push_str(&format!("{}\n", r.describe())),
                Err(FitError::NoFit { .. }) => {
                    s.push_str("no linear recurrence within the order bound\n")
                }
                Err(e) => s.push_str(&format!("recurrence: {e}\n")),
            }
            s
        }
    };
    let manifest = RunManifest::collect(&[seq_file], &[]);
    emit(out, &content, &manifest)?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct SweepRow {
    index: u32,
    seed: u64,
    digest: String,
    pairs: usize,
    linears: usize,
    singletons: usize,
    alphas: Vec<usize>,
    fit: Option<String>,
    period: Option<u32>,
    degree: Option<usize>,
    stable_degree: Option<i64>,
    trend1: Option<String>,
    trend2: Option<String>,
    trend3: Option<String>,
    note: Option<String>,
}

#[allow(clippy::too_many_arguments)]
fn cmd_random_sweep(
    seed: u64,
    count: u32,
    n_max: u32,
    max_pairs: u32,
    max_linears: u32,
    max_singletons: u32,
    edge_prob: f64,
    budget_nodes: u64,
    budget_secs: u64,
    format: Format,
    out: &Option<PathBuf>,
) -> CliResult {
    let budget = budget_from(Some(budget_nodes), Some(budget_secs));
    let mut rows = Vec::new();
    let mut seeds = Vec::new();
    let mut exhausted = false;
    for i in 0..count {
        let graph_seed = seed.wrapping_add(i as u64);
        seeds.push(graph_seed);
        let params = RandomGenParams {
            pair_orbits: CountRange::new(0, max_pairs),
            linear_orbits: CountRange::new(0, max_linears),
            singletons: CountRange::new(0, max_singletons),
            edge_probability: edge_prob,
            seed: graph_seed,
        };
        let c = random(&params).map_err(|e| CliError::new("random", e))?;
        let (p, l, s) = c.orbit_counts();
        let seq = scan_alpha(&c, 2, n_max, budget).map_err(|e| CliError::new("scan", e))?;
        exhausted |= seq.rows.iter().any(|r| r.status == RowStatus::Budget);
        let mut row = SweepRow {
            index: i,
            seed: graph_seed,
            digest: c.digest()[..12].to_string(),
            pairs: p,
            linears: l,
            singletons: s,
            alphas: seq.alphas(),
            fit: None,
            period: None,
            degree: None,
            stable_degree: None,
            trend1: None,
            trend2: None,
            trend3: None,
            note: None,
        };
        match fit_quasi_polynomial(&seq, 4, 3) {
            Ok(fit) => {
                let report = check_trends(&c, &seq, &fit);
                row.fit = Some(fit.describe());
                row.period = Some(fit.period);
                row.degree = Some(fit.degree());
                row.stable_degree = Some(fit.stable_degree);
                row.trend1 = Some(format!("{:?}", report.trend1));
                row.trend2 = Some(if report.has_johnson_orbit {
                    "N/A".to_string()
                } else {
                    format!("{:?}", report.trend2)
                });
                row.trend3 = Some(format!("{:?}", report.trend3));
            }
            Err(e) => row.note = Some(e.to_string()),
        }
        rows.push(row);
    }

    let content = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&rows).expect("rows serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from(
                "index,seed,digest,pairs,linears,singletons,period,degree,stable_degree,trend1,trend2,trend3,note\n",
            );
            for r in &rows {
                let opt = |x: &Option<String>| x.clone().unwrap_or_default();
                s.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                    r.index,
                    r.seed,
                    r.digest,
                    r.pairs,
                    r.linears,
                    r.singletons,
                    r.period.map(|v| v.to_string()).unwrap_or_default(),
                    r.degree.map(|v| v.to_string()).unwrap_or_default(),
                    r.stable_degree.map(|v| v.to_string()).unwrap_or_default(),
                    opt(&r.trend1),
                    opt(&r.trend2),
                    opt(&r.trend3),
                    opt(&r.note),
                ));
            }
            s
        }
        _ => {
            let mut s =
                format!("random sweep: {count} graphs, master seed {seed}, n in [2, {n_max}]\n");
            for r in &rows {
                s.push_str(&format!(
                    "#{:<3} seed {:<6} [{}p {}l {}s] {} | t1 {} t2 {} t3 {}\n",
                    r.index,
                    r.seed,
                    r.pairs,
                    r.linears,
                    r.singletons,
                    r.fit
                        .clone()
                        .unwrap_or_else(|| r.note.clone().unwrap_or_else(|| "?".to_string())),
                    r.trend1.clone().unwrap_or_else(|| "-".into()),
                    r.trend2.clone().unwrap_or_else(|| "-".into()),
                    r.trend3.clone().unwrap_or_else(|| "-".into()),
                ));
            }
            s
        }
    };
    let manifest = RunManifest::collect(&[], &seeds);
    emit(out, &content, &manifest)?;
    Ok(if exhausted {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_verify(suite: &str) -> CliResult {
    let suite = Suite::parse(suite).ok_or_else(|| {
        CliError::new(
            "usage",
            format!("unknown suite {suite:?}; expected one of {:?}", Suite::NAMES),
        )
    })?;
    let results = figraph::verify::run_suite(suite);
    let mut all_passed = true;
    for r in &results {
        println!("{}", r.line());
        all_passed &= r.passed;
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_ideal(file: &Path, n: Option<u32>, format: Format, out: &Option<PathBuf>) -> CliResult {
    let (g, _) = graph_from_input(file, n)?;
    let ideal = edge_ideal(&g);
    let content = match format {
        Format::Json => ideal.to_json(),
        _ => {
            let mut s = format!("R = {}\n", ideal.ring_string());
            s.push_str(&format!("I = {}\n", ideal.ideal_string()));
            s.push_str(&format!(
                "dim R/I = {} (via {:?})\n",
                ideal.krull_dim, ideal.method
            ));
            if let Ok(report) = check_dim_equals_alpha(&g) {
                s.push_str(&format!(
                    "alpha (brute force) = {}; dim == alpha: {}\n",
                    report.alpha, report.equal
                ));
            }
            s
        }
    };
    let manifest = RunManifest::collect(&[file], &[]);
    emit(out, &content, &manifest)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_family(spec: &str, out: &Option<PathBuf>) -> CliResult {
    let fam = Family::parse_spec(spec).map_err(|e| CliError::new("family", e))?;
    let c = figraph::model::family(&fam).map_err(|e| CliError::new("family", e))?;
    let content = String::from_utf8(c.serialize()).expect("canonical JSON is utf-8");
    let manifest = RunManifest::collect(&[], &[]);
    emit(out, &content, &manifest)?;
    Ok(ExitCode::SUCCESS)
}

fn configure_threads() {
    if let Ok(v) = std::env::var("FIGRAPH_THREADS") {
        if let Ok(k) = v.parse::<usize>() {
            if k >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(k)
                    .build_global();
            }
        }
    }
}

fn run(cli: Cli) -> CliResult {
    match &cli.command {
        Command::Validate { file } => cmd_validate(file),
        Command::Expand {
            file,
            n,
            format,
            out,
        } => cmd_expand(file, *n, *format, out),
        Command::Alpha {
            file,
            n,
            budget_nodes,
            budget_secs,
            format,
            out,
        } => cmd_alpha(file, *n, *budget_nodes, *budget_secs, *format, out),
        Command::Scan {
            file,
            n_min,
            n_max,
            budget_nodes,
            budget_secs,
            format,
            out,
        } => cmd_scan(
            file,
            *n_min,
            *n_max,
            *budget_nodes,
            *budget_secs,
            *format,
            out,
        ),
        Command::Fit {
            seq_file,
            max_period,
            max_degree,
            format,
            out,
        } => cmd_fit(seq_file, *max_period, *max_degree, *format, out),
        Command::RandomSweep {
            seed,
            count,
            n_max,
            max_pairs,
            max_linears,
            max_singletons,
            edge_prob,
            budget_nodes,
            budget_secs,
            format,
            out,
        } => cmd_random_sweep(
            *seed,
            *count,
            *n_max,
            *max_pairs,
            *max_linears,
            *max_singletons,
            *edge_prob,
            *budget_nodes,
            *budget_secs,
            *format,
            out,
        ),
        Command::Verify { suite } => cmd_verify(suite),
        Command::Ideal {
            file,
            n,
            format,
            out,
        } => cmd_ideal(file, *n, *format, out),
        Command::Family { spec, out } => cmd_family(spec, out),
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            let body = serde_json::json!({
                "error": err.message,
                "kind": err.kind,
            });
            eprintln!("{body}");
            ExitCode::FAILURE
        }
    }
}
