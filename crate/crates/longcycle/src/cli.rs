//! Command-line interface. Exit codes: 0 clean, 1 when any check
//! violation was found, 2 for usage errors.

use crate::corpus::{CorpusKind, CorpusSpec, FileFormat};
use crate::extremal::{build_extremal, predicted_invariants, ExtremalParams};
use crate::graph::{parse_edge_list, parse_graph6, to_graph6, CycleSeq, Graph, PathSeq, VertexSet};
use crate::report::{canonical_json, csv_rows, BoundReport, Summary, CSV_HEADER};
use crate::runner::{self, Level, RunConfig};
use crate::solve::{self, SolveLimits, DEFAULT_MAX_DP_N, DEFAULT_MAX_ORACLE_N};
use crate::spreading::{
    classify, find_minimal_spreadings, min_trivial_roots, Host, MinimalityOrder, SpreadLimits,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "longcycle",
    about = "Exact circumference solvers and a verification harness for two sharp lower bounds",
    version
)]
struct Cli {
    /// Largest n routed to the subset DP (env LONGCYCLE_MAX_DP_N)
    #[arg(long, global = true)]
    max_dp_n: Option<usize>,
    /// Largest n allowed for the brute-force oracle (env LONGCYCLE_MAX_ORACLE_N)
    #[arg(long, global = true)]
    max_oracle_n: Option<usize>,
    /// Worker threads for corpus runs
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print n, m, minimum degree, circumference and the per-cycle-set
    /// remainder parameters of one graph
    Solve {
        /// Path to an edge-list or graph6 file, or a literal graph6 string
        graph: String,
    },
    /// Run bound/lemma/claim checks over a corpus and emit reports
    Verify {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long, value_enum, default_value_t = LevelArg::Theorems)]
        level: LevelArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        /// Report destination (stdout when omitted)
        #[arg(long)]
        output: Option<PathBuf>,
        /// Skip disconnected graphs
        #[arg(long)]
        connected_only: bool,
    },
    /// Hunt for counterexamples on randomized corpora; violations are
    /// persisted with their seeds
    Hunt {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long, value_enum, default_value_t = LevelArg::Theorems)]
        level: LevelArg,
        /// Stop at the first violation
        #[arg(long)]
        stop_on_violation: bool,
        /// Where to persist violations (written only when nonempty)
        #[arg(long, default_value = "violations.json")]
        violations: PathBuf,
        /// Also write the full report stream
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        connected_only: bool,
    },
    /// Build a member of the sharpness family
    Extremal {
        #[arg(long)]
        kappa: usize,
        #[arg(long)]
        delta: usize,
        /// Print the graph6 encoding instead of the invariant table
        #[arg(long)]
        emit: bool,
    },
    /// Enumerate and classify the minimal spreadings of a host path or
    /// cycle
    Spread {
        /// Path to an edge-list or graph6 file, or a literal graph6 string
        #[arg(long)]
        graph: String,
        /// Comma-separated removed vertex ids
        #[arg(long, default_value = "")]
        remove: String,
        /// Comma-separated host path vertex sequence
        #[arg(long, conflicts_with = "host_cycle")]
        host_path: Option<String>,
        /// Comma-separated host cycle vertex sequence
        #[arg(long)]
        host_cycle: Option<String>,
        #[arg(long, value_enum, default_value_t = OrderArg::Trivial)]
        order: OrderArg,
    },
    /// Stream the graph6 encodings of all labeled graphs on n vertices
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected_only: bool,
    },
}

#[derive(Args)]
struct CorpusArgs {
    #[arg(long, value_enum)]
    corpus: CorpusKindArg,
    /// Vertex count (exhaustive, gnp, regular)
    #[arg(long)]
    n: Option<usize>,
    /// Edge probability (gnp)
    #[arg(long)]
    p: Option<f64>,
    /// Degree (regular)
    #[arg(long)]
    d: Option<usize>,
    /// Number of graphs (gnp, regular)
    #[arg(long)]
    count: Option<usize>,
    /// Generator seed (gnp, regular)
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    kappa_min: Option<usize>,
    #[arg(long)]
    kappa_max: Option<usize>,
    #[arg(long)]
    delta_min: Option<usize>,
    #[arg(long)]
    delta_max: Option<usize>,
    /// Graph file (file corpus)
    #[arg(long)]
    path: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FileFormatArg::Graph6)]
    file_format: FileFormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum CorpusKindArg {
    Exhaustive,
    Gnp,
    Regular,
    Extremal,
    File,
}

#[derive(Clone, Copy, ValueEnum)]
enum FileFormatArg {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Theorems,
    Lemmas,
    Claims,
    All,
}

impl From<LevelArg> for Level {
    fn from(value: LevelArg) -> Self {
        match value {
            LevelArg::Theorems => Level::Theorems,
            LevelArg::Lemmas => Level::Lemmas,
            LevelArg::Claims => Level::Claims,
            LevelArg::All => Level::All,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    /// Minimize the number of trivial roots
    Trivial,
    /// Then minimize the number of confined roots
    TrivialConfined,
}

/// Entry point used by the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap exits 0 for --help/--version, 2 for usage errors
            e.print().expect("stderr is writable");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn env_usize(name: &str) -> Option<usize> {
    std::env::var(name).ok().and_then(|v| v.parse().ok())
}

fn resolve_limits(cli: &Cli) -> Result<SolveLimits, String> {
    let dp = cli
        .max_dp_n
        .or_else(|| env_usize("LONGCYCLE_MAX_DP_N"))
        .unwrap_or(DEFAULT_MAX_DP_N);
    let oracle = cli
        .max_oracle_n
        .or_else(|| env_usize("LONGCYCLE_MAX_ORACLE_N"))
        .unwrap_or(DEFAULT_MAX_ORACLE_N);
    SolveLimits::new(dp, oracle).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<i32, String> {
    let limits = resolve_limits(&cli)?;
    let jobs = cli.jobs.max(1);
    match cli.command {
        Command::Solve { ref graph } => cmd_solve(graph, &limits),
        Command::Verify {
            ref corpus,
            level,
            format,
            ref output,
            connected_only,
        } => {
            let spec = corpus.to_spec(connected_only)?;
            let cfg = RunConfig {
                level: level.into(),
                limits,
                spread: SpreadLimits::default(),
                jobs,
                stop_on_violation: false,
            };
            cmd_verify(&spec, &cfg, format, output.as_deref())
        }
        Command::Hunt {
            ref corpus,
            level,
            stop_on_violation,
            ref violations,
            ref output,
            connected_only,
        } => {
            let spec = corpus.to_spec(connected_only)?;
            let cfg = RunConfig {
                level: level.into(),
                limits,
                spread: SpreadLimits::default(),
                jobs,
                stop_on_violation,
            };
            cmd_hunt(&spec, &cfg, violations, output.as_deref())
        }
        Command::Extremal { kappa, delta, emit } => cmd_extremal(kappa, delta, emit, &limits),
        Command::Spread {
            ref graph,
            ref remove,
            ref host_path,
            ref host_cycle,
            order,
        } => cmd_spread(graph, remove, host_path.as_deref(), host_cycle.as_deref(), order),
        Command::Enumerate { n, connected_only } => cmd_enumerate(n, connected_only),
    }
}

/// Reads a graph from a file path or a literal graph6 string.
fn read_graph(arg: &str) -> Result<Graph, String> {
    if Path::new(arg).is_file() {
        let text = fs::read_to_string(arg).map_err(|e| format!("reading {arg}: {e}"))?;
        let trimmed = text.trim();
        if !trimmed.is_empty() && !trimmed.contains('\n') && !trimmed.contains(' ') {
            if let Ok(g) = parse_graph6(trimmed) {
                return Ok(g);
            }
        }
        parse_edge_list(&text).map_err(|e| format!("parsing {arg} as edge list: {e}"))
    } else {
        parse_graph6(arg).map_err(|e| format!("parsing graph6 argument: {e}"))
    }
}

fn parse_id_list(text: &str) -> Result<Vec<usize>, String> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid vertex id `{t}`"))
        })
        .collect()
}

fn cmd_solve(graph: &str, limits: &SolveLimits) -> Result<i32, String> {
    let g = read_graph(graph)?;
    println!("graph: {}", to_graph6(&g));
    if g.n() == 0 {
        println!("n: 0  m: 0");
        println!("circumference: 0");
        return Ok(0);
    }
    let delta = g.min_degree().expect("nonempty graph");
    println!("n: {}  m: {}  delta: {}", g.n(), g.edge_count(), delta);
    let circ = solve::longest_cycle_length(&g, limits).map_err(|e| e.to_string())?;
    let p_global = solve::longest_path_length(&g, limits).map_err(|e| e.to_string())?;
    println!("longest path: {p_global}");
    println!("circumference: {circ}");
    let sets = if circ >= 3 {
        solve::all_longest_cycle_vertex_sets(&g, limits).map_err(|e| e.to_string())?
    } else {
        println!("(degenerate: the longest cycles are single vertices or edges)");
        crate::verify::degenerate_cycle_sets(&g, circ)
    };
    println!("longest cycle vertex sets ({}):", sets.len());
    for set in &sets {
        let eval =
            crate::verify::evaluate_cycle_set(&g, set, delta, limits).map_err(|e| e.to_string())?;
        let ids: Vec<String> = eval.vertex_set.iter().map(|v| v.to_string()).collect();
        println!(
            "  {{{}}}: p_bar={} c_bar={} bound1={} bound2={} slack1={} slack2={}{}{}",
            ids.join(","),
            eval.p_bar,
            eval.c_bar,
            eval.bound1,
            eval.bound2,
            eval.slack1,
            eval.slack2,
            if eval.sharp1 { " sharp1" } else { "" },
            if eval.sharp2 { " sharp2" } else { "" },
        );
    }
    Ok(0)
}

impl CorpusArgs {
    fn to_spec(&self, connected_only: bool) -> Result<CorpusSpec, String> {
        let need = |what: &str, v: Option<usize>| v.ok_or(format!("--{what} is required"));
        let kind = match self.corpus {
            CorpusKindArg::Exhaustive => CorpusKind::Exhaustive {
                n: need("n", self.n)?,
            },
            CorpusKindArg::Gnp => CorpusKind::Gnp {
                n: need("n", self.n)?,
                p: self.p.ok_or("--p is required")?,
                count: need("count", self.count)?,
                seed: self.seed.ok_or("--seed is required")?,
            },
            CorpusKindArg::Regular => CorpusKind::Regular {
                n: need("n", self.n)?,
                d: need("d", self.d)?,
                count: need("count", self.count)?,
                seed: self.seed.ok_or("--seed is required")?,
            },
            CorpusKindArg::Extremal => CorpusKind::Extremal {
                kappa_min: need("kappa-min", self.kappa_min)?,
                kappa_max: need("kappa-max", self.kappa_max)?,
                delta_min: need("delta-min", self.delta_min)?,
                delta_max: need("delta-max", self.delta_max)?,
            },
            CorpusKindArg::File => CorpusKind::File {
                path: self.path.clone().ok_or("--path is required")?,
                format: match self.file_format {
                    FileFormatArg::Graph6 => FileFormat::Graph6,
                    FileFormatArg::Edgelist => FileFormat::EdgeList,
                },
            },
        };
        Ok(CorpusSpec {
            kind,
            connected_only,
        })
    }
}

/// Writes the report stream as a single canonical JSON document.
struct JsonSink<W: Write> {
    out: W,
    first: bool,
}

impl<W: Write> JsonSink<W> {
    fn new(mut out: W) -> io::Result<Self> {
        out.write_all(b"{\"reports\":[")?;
        Ok(JsonSink { out, first: true })
    }

    fn push(&mut self, report: &BoundReport) -> io::Result<()> {
        if !self.first {
            self.out.write_all(b",")?;
        }
        self.first = false;
        self.out.write_all(canonical_json(report).as_bytes())
    }

    fn finish(mut self, summary: &Summary) -> io::Result<()> {
        write!(
            self.out,
            "],\"schema_version\":{},\"summary\":{}}}",
            crate::report::SCHEMA_VERSION,
            canonical_json(summary)
        )?;
        self.out.write_all(b"\n")
    }
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>, String> {
    match path {
        Some(p) => {
            let f = fs::File::create(p).map_err(|e| format!("creating {}: {e}", p.display()))?;
            Ok(Box::new(io::BufWriter::new(f)))
        }
        None => Ok(Box::new(io::BufWriter::new(io::stdout()))),
    }
}

fn print_summary(summary: &Summary) {
    eprintln!(
        "corpus {} | processed {} | degenerate {} | filtered {} | capacity errors {} | checks passed {} / vacuous {} / failed {} / n.a. {} | sharp1 {} | sharp2 {} | violations {}",
        summary.corpus_size,
        summary.processed,
        summary.skipped_degenerate,
        summary.skipped_filtered,
        summary.capacity_errors,
        summary.checks.passed,
        summary.checks.vacuous,
        summary.checks.failed,
        summary.checks.not_applicable,
        summary.sharp1_count,
        summary.sharp2_count,
        summary.violations
    );
}

fn cmd_verify(
    spec: &CorpusSpec,
    cfg: &RunConfig,
    format: FormatArg,
    output: Option<&Path>,
) -> Result<i32, String> {
    let out = open_output(output)?;
    let summary = match format {
        FormatArg::Json => {
            let mut sink = JsonSink::new(out).map_err(|e| e.to_string())?;
            let mut io_error: Option<io::Error> = None;
            let summary = runner::run_verify(spec, cfg, &mut |r| {
                if io_error.is_none() {
                    if let Err(e) = sink.push(r) {
                        io_error = Some(e);
                    }
                }
            })
            .map_err(|e| e.to_string())?;
            if let Some(e) = io_error {
                return Err(format!("writing reports: {e}"));
            }
            sink.finish(&summary).map_err(|e| e.to_string())?;
            summary
        }
        FormatArg::Csv => {
            let mut out = out;
            writeln!(out, "{CSV_HEADER}").map_err(|e| e.to_string())?;
            let mut io_error: Option<io::Error> = None;
            let summary = runner::run_verify(spec, cfg, &mut |r| {
                if io_error.is_none() {
                    for row in csv_rows(r) {
                        if let Err(e) = writeln!(out, "{row}") {
                            io_error = Some(e);
                            break;
                        }
                    }
                }
            })
            .map_err(|e| e.to_string())?;
            if let Some(e) = io_error {
                return Err(format!("writing reports: {e}"));
            }
            out.flush().map_err(|e| e.to_string())?;
            summary
        }
    };
    print_summary(&summary);
    Ok(if summary.violations > 0 { 1 } else { 0 })
}

fn cmd_hunt(
    spec: &CorpusSpec,
    cfg: &RunConfig,
    violations_path: &Path,
    output: Option<&Path>,
) -> Result<i32, String> {
    match output {
        Some(path) => {
            let mut sink = JsonSink::new(open_output(Some(path))?).map_err(|e| e.to_string())?;
            let mut io_error: Option<io::Error> = None;
            let outcome = runner::hunt(spec, cfg, &mut |r| {
                if io_error.is_none() {
                    if let Err(e) = sink.push(r) {
                        io_error = Some(e);
                    }
                }
            })
            .map_err(|e| e.to_string())?;
            if let Some(e) = io_error {
                return Err(format!("writing reports: {e}"));
            }
            sink.finish(&outcome.summary).map_err(|e| e.to_string())?;
            finish_hunt(outcome, violations_path)
        }
        None => {
            let outcome = runner::hunt(spec, cfg, &mut |_| {}).map_err(|e| e.to_string())?;
            finish_hunt(outcome, violations_path)
        }
    }
}

fn finish_hunt(outcome: runner::HuntOutcome, violations_path: &Path) -> Result<i32, String> {
    print_summary(&outcome.summary);
    if outcome.violations.is_empty() {
        eprintln!("no violations");
        Ok(0)
    } else {
        let body = canonical_json(&outcome.violations);
        fs::write(violations_path, body.as_bytes())
            .map_err(|e| format!("persisting violations: {e}"))?;
        eprintln!(
            "{} violation(s) persisted to {}",
            outcome.violations.len(),
            violations_path.display()
        );
        Ok(1)
    }
}

fn cmd_extremal(kappa: usize, delta: usize, emit: bool, limits: &SolveLimits) -> Result<i32, String> {
    let params = ExtremalParams::new(kappa, delta).map_err(|e| e.to_string())?;
    let g = build_extremal(&params);
    if emit {
        println!("{}", to_graph6(&g));
        return Ok(0);
    }
    let pred = predicted_invariants(&params);
    println!("kappa: {kappa}  delta: {delta}");
    println!("n: {}  m: {}", g.n(), g.edge_count());
    println!("predicted circumference: {}", pred.circumference);
    println!(
        "predicted remainder: p_bar={} c_bar={}",
        pred.p_bar, pred.c_bar
    );
    println!(
        "predicted bounds: bound1={} bound2={}",
        pred.bound1, pred.bound2
    );
    if g.n() <= limits.max_dp_n {
        let circ = solve::longest_cycle_length(&g, limits).map_err(|e| e.to_string())?;
        println!(
            "solver circumference: {circ} ({})",
            if circ == pred.circumference {
                "matches"
            } else {
                "MISMATCH"
            }
        );
    } else {
        println!("solver circumference: skipped (n exceeds --max-dp-n)");
    }
    Ok(0)
}

fn cmd_spread(
    graph: &str,
    remove: &str,
    host_path: Option<&str>,
    host_cycle: Option<&str>,
    order: OrderArg,
) -> Result<i32, String> {
    let g = read_graph(graph)?;
    let removed_ids = parse_id_list(remove)?;
    let removed = VertexSet::from_ids(g.n(), removed_ids).map_err(|e| e.to_string())?;
    let host = match (host_path, host_cycle) {
        (Some(p), None) => Host::Path(
            PathSeq::new(&g, parse_id_list(p)?).map_err(|e| format!("host path: {e}"))?,
        ),
        (None, Some(c)) => Host::Cycle(
            CycleSeq::new(&g, parse_id_list(c)?).map_err(|e| format!("host cycle: {e}"))?,
        ),
        _ => return Err("exactly one of --host-path / --host-cycle is required".into()),
    };
    let order = match order {
        OrderArg::Trivial => MinimalityOrder::TrivialCount,
        OrderArg::TrivialConfined => MinimalityOrder::TrivialThenConfined,
    };
    let matching_bound =
        min_trivial_roots(&g, &removed, &host).map_err(|e| e.to_string())?;
    let minimal = find_minimal_spreadings(&g, &removed, &host, order, &SpreadLimits::default())
        .map_err(|e| e.to_string())?;
    println!("graph: {} (n={}, m={})", to_graph6(&g), g.n(), g.edge_count());
    println!("removed: {:?}", removed.to_vec());
    println!(
        "host ({}): {:?}",
        if host.is_cycle() { "cycle" } else { "path" },
        host.vertices()
    );
    println!(
        "minimum trivial roots: {} (matching bound {matching_bound})",
        minimal.min_trivial
    );
    if let Some(c) = minimal.min_confined {
        println!("minimum confined roots among those: {c}");
    }
    println!("minimal spreadings: {}", minimal.spreadings.len());
    for (i, s) in minimal.spreadings.iter().enumerate() {
        println!("spreading {}:", i + 1);
        for path in s.paths() {
            let ids: Vec<String> = path.iter().map(|v| v.to_string()).collect();
            println!("  {}: {}", path[0], ids.join(" -> "));
        }
        let cls = classify(&g, s);
        println!(
            "  trivial {:?}  confined {:?}  crossing {:?}",
            cls.trivial, cls.confined, cls.crossing
        );
        if host.is_cycle() {
            println!(
                "  confined split: low {:?}  high {:?}",
                cls.confined_low, cls.confined_high
            );
        }
        for rec in &cls.records {
            println!(
                "  root {}: endpoint {}, spread {:?}, removed {:?}, links {:?}{}",
                rec.root,
                rec.endpoint,
                rec.spread_neighbors.to_vec(),
                rec.removed_neighbors.to_vec(),
                rec.trivial_links,
                match &rec.reverse_links {
                    Some(r) => format!(", reverse {r:?}"),
                    None => String::new(),
                }
            );
        }
    }
    Ok(0)
}

fn cmd_enumerate(n: usize, connected_only: bool) -> Result<i32, String> {
    let spec = CorpusSpec {
        kind: CorpusKind::Exhaustive { n },
        connected_only,
    };
    let corpus = spec.load().map_err(|e| e.to_string())?;
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    for i in 0..corpus.len() {
        let (g, _) = corpus.graph_at(i).map_err(|e| e.to_string())?;
        if connected_only && !g.is_connected() {
            continue;
        }
        writeln!(out, "{}", to_graph6(&g)).map_err(|e| e.to_string())?;
    }
    out.flush().map_err(|e| e.to_string())?;
    Ok(0)
}
