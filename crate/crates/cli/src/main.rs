//! `bimod`: generate benchmarks, detect communities, score partitions,
//! project graphs and run parameter sweeps.

use std::fs::{self, File};
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use bimod::io::{
    read_edge_list, read_partition, write_bipartite_partition, write_edge_list, write_partition, write_projection,
    EdgeListFormat, PartitionFile,
};
use bimod::louvain::detect;
use bimod::sweep::{run_sweep, write_rows, write_summary, SweepConfig};
use bimod::synth::{generate, BenchmarkSpec, DegreeSpec};
use bimod::{
    modularity_barber, modularity_projected, project_with, v_measure, Algorithm, Assignment, BipartiteGraph, Execution,
    LouvainConfig, Objective, SelfLoops, Side, SimilarityScores,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "bimod", version, about = "Community detection on bipartite networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a planted-partition benchmark graph.
    Generate(GenerateArgs),
    /// Detect communities in a bipartite edge list.
    Detect(DetectArgs),
    /// Compare two partition files.
    Eval(EvalArgs),
    /// Write the weighted one-mode projection of a bipartite edge list.
    Project(ProjectArgs),
    /// Run a benchmark sweep described by a JSON config.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct GraphInput {
    /// Bipartite edge list, one `bottom top [weight]` line per edge.
    graph: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Konect,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Bottom,
    Top,
}

#[derive(Clone, Copy, ValueEnum)]
enum LoopsArg {
    Keep,
    Drop,
}

impl From<LoopsArg> for SelfLoops {
    fn from(l: LoopsArg) -> Self {
        match l {
            LoopsArg::Keep => SelfLoops::Keep,
            LoopsArg::Drop => SelfLoops::Drop,
        }
    }
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, default_value_t = 4)]
    communities: usize,
    /// Bottom nodes per community.
    #[arg(long, default_value_t = 250)]
    n: usize,
    /// Top nodes per community.
    #[arg(long, default_value_t = 250)]
    m: usize,
    /// Bottom degree distribution: `poisson:<mean>` or `power:<exp>[:<min>[:<max>]]`.
    #[arg(long, default_value = "poisson:5")]
    bottom: String,
    #[arg(long, default_value = "poisson:5")]
    top: String,
    /// Fraction of edges rewired across communities.
    #[arg(long, default_value_t = 0.0, value_parser = unit_interval)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output prefix; writes `<out>.edges`, `<out>.target.tsv` and `<out>.json`.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct DetectArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long, default_value = "projected", value_parser = algorithm)]
    algorithm: Algorithm,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
    restarts: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1.0, value_parser = positive)]
    resolution: f64,
    /// Diagonal of the projections used by projecting algorithms and for Q_P.
    #[arg(long, value_enum, default_value_t = LoopsArg::Keep)]
    self_loops: LoopsArg,
    /// Run restarts one after another.
    #[arg(long)]
    sequential: bool,
    /// Output prefix; writes `<out>.tsv` and `<out>.json`. The report is
    /// printed either way.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    /// Reference partition (classes).
    target: PathBuf,
    /// Partition to score (clusters).
    found: PathBuf,
}

#[derive(Args)]
struct ProjectArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long, value_enum, default_value_t = SideArg::Bottom)]
    side: SideArg,
    #[arg(long, value_enum, default_value_t = LoopsArg::Keep)]
    self_loops: LoopsArg,
    /// Defaults to standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// JSON config; omitted fields take their defaults.
    config: PathBuf,
    /// Overrides the config's master seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Output prefix; writes `<out>.rows.csv` and `<out>.summary.csv`.
    /// Falls back to the config's `output`.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    sequential: bool,
}

fn unit_interval(s: &str) -> Result<f64, String> {
    let p: f64 = s.parse().map_err(|_| format!("{s:?} is not a number"))?;
    if (0.0..=1.0).contains(&p) {
        Ok(p)
    } else {
        Err(format!("{p} is not in [0, 1]"))
    }
}

fn positive(s: &str) -> Result<f64, String> {
    let x: f64 = s.parse().map_err(|_| format!("{s:?} is not a number"))?;
    if x.is_finite() && x > 0.0 {
        Ok(x)
    } else {
        Err(format!("{x} must be positive"))
    }
}

fn algorithm(s: &str) -> Result<Algorithm, String> {
    match s.parse::<Algorithm>() {
        Ok(Algorithm::Louvain) | Err(_) => Err(format!(
            "unknown algorithm {s:?}; expected naive, bilouvain, dual, standard or projected"
        )),
        Ok(a) => Ok(a),
    }
}

/// Bad input that the user can fix (exit 2) versus anything else (exit 1).
enum Failure {
    Usage(String),
    Runtime(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Runtime(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.into())
    }
}

impl From<bimod::Error> for Failure {
    fn from(e: bimod::Error) -> Self {
        Failure::Runtime(e.into())
    }
}

type Outcome = Result<(), Failure>;

fn execution(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    }
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn create(path: &Path) -> anyhow::Result<BufWriter<File>> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    Ok(BufWriter::new(file))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> anyhow::Result<()> {
    let mut w = create(path)?;
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

fn read_graph(input: &GraphInput) -> anyhow::Result<BipartiteGraph> {
    let file = File::open(&input.graph).with_context(|| format!("opening {}", input.graph.display()))?;
    let format = match input.format {
        Format::Plain => EdgeListFormat::Plain,
        Format::Konect => EdgeListFormat::Konect,
    };
    let list =
        read_edge_list(BufReader::new(file), format).with_context(|| format!("reading {}", input.graph.display()))?;
    Ok(list.graph)
}

#[derive(Serialize)]
struct GenerateMeta<'a> {
    communities: usize,
    n_bottom_per_community: usize,
    n_top_per_community: usize,
    bottom: &'a DegreeSpec,
    top: &'a DegreeSpec,
    p: f64,
    seed: u64,
    n_bottom: usize,
    n_top: usize,
    total_weight: u64,
    edges: String,
    target: String,
}

fn cmd_generate(args: &GenerateArgs) -> Outcome {
    let spec_for = |text: &str, n: usize| DegreeSpec::parse(text, n).map_err(|e| Failure::Usage(e.to_string()));
    let spec = BenchmarkSpec {
        communities: args.communities,
        n_bottom: args.n,
        n_top: args.m,
        bottom: spec_for(&args.bottom, args.n)?,
        top: spec_for(&args.top, args.m)?,
        mixing: args.p,
        seed: args.seed,
    };
    spec.validate().map_err(|e| Failure::Usage(e.to_string()))?;
    let bench = generate(&spec)?;
    let edges = with_suffix(&args.out, ".edges");
    let target = with_suffix(&args.out, ".target.tsv");
    let mut w = create(&edges)?;
    write_edge_list(&bench.graph, &mut w)?;
    w.flush()?;
    let mut w = create(&target)?;
    write_bipartite_partition(&bench.target, &mut w)?;
    w.flush()?;
    let meta = GenerateMeta {
        communities: spec.communities,
        n_bottom_per_community: spec.n_bottom,
        n_top_per_community: spec.n_top,
        bottom: &spec.bottom,
        top: &spec.top,
        p: spec.mixing,
        seed: spec.seed,
        n_bottom: bench.graph.n_bottom(),
        n_top: bench.graph.n_top(),
        total_weight: bench.graph.total_weight(),
        edges: edges.display().to_string(),
        target: target.display().to_string(),
    };
    write_json(&with_suffix(&args.out, ".json"), &meta)?;
    Ok(())
}

#[derive(Serialize)]
struct DetectReport {
    algorithm: String,
    objective: String,
    objective_value: f64,
    /// Projected modularity of the bottom-side restriction.
    q_projected: f64,
    q_barber: Option<f64>,
    communities: usize,
    levels: usize,
    restarts: u64,
    best_restart: usize,
    seed: u64,
    resolution: f64,
    self_loops: SelfLoops,
}

fn cmd_detect(args: &DetectArgs) -> Outcome {
    let g = read_graph(&args.input)?;
    let cfg = LouvainConfig {
        objective: Objective {
            resolution: args.resolution,
            ..Objective::default()
        },
        seed: args.seed,
        restarts: args.restarts as usize,
        execution: execution(args.sequential),
        self_loops: args.self_loops.into(),
        ..LouvainConfig::default()
    };
    let result = detect(args.algorithm, &g, &cfg)?;
    let bottom = result.assignment.bottom();
    let projection = project_with(&g, Side::Bottom, cfg.self_loops);
    let report = DetectReport {
        algorithm: result.algorithm.name().to_string(),
        objective: result.objective.kind.name().to_string(),
        objective_value: result.objective_value,
        q_projected: modularity_projected(&projection, &bottom, args.resolution)?,
        q_barber: result
            .assignment
            .as_bipartite()
            .map(|p| modularity_barber(&g, p, args.resolution))
            .transpose()?,
        communities: result.community_count(),
        levels: result.levels,
        restarts: args.restarts,
        best_restart: result.restart,
        seed: args.seed,
        resolution: args.resolution,
        self_loops: cfg.self_loops,
    };
    if let Some(out) = &args.out {
        let mut w = create(&with_suffix(out, ".tsv"))?;
        match &result.assignment {
            Assignment::Bipartite(p) => write_bipartite_partition(p, &mut w)?,
            Assignment::Unipartite(p) => write_partition(p, &mut w)?,
        }
        w.flush()?;
        write_json(&with_suffix(out, ".json"), &report)?;
    }
    let mut stdout = io::stdout().lock();
    serde_json::to_writer_pretty(&mut stdout, &report).context("writing report")?;
    writeln!(stdout)?;
    Ok(())
}

#[derive(Serialize)]
struct EvalReport {
    nodes: usize,
    target_vs_found: SimilarityScores,
    found_vs_target: SimilarityScores,
}

fn load_partition(path: &Path) -> anyhow::Result<PartitionFile> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    read_partition(BufReader::new(file)).with_context(|| format!("reading {}", path.display()))
}

/// Labels to compare: both sides when both files are bipartite, otherwise
/// the bottom (or only) node set.
fn comparable(a: &PartitionFile, b: &PartitionFile) -> anyhow::Result<(Vec<usize>, Vec<usize>)> {
    let (x, y) = match (a, b) {
        (PartitionFile::Bipartite(p), PartitionFile::Bipartite(q)) => {
            anyhow::ensure!(
                p.bottom().len() == q.bottom().len() && p.top().len() == q.top().len(),
                "node sets differ: {}+{} vs {}+{} bottom+top nodes",
                p.bottom().len(),
                p.top().len(),
                q.bottom().len(),
                q.top().len()
            );
            let joint = |p: &bimod::BipartitePartition| p.bottom().iter().chain(p.top()).copied().collect();
            (joint(p), joint(q))
        }
        _ => (a.primary_labels().to_vec(), b.primary_labels().to_vec()),
    };
    anyhow::ensure!(x.len() == y.len(), "node sets differ: {} vs {} nodes", x.len(), y.len());
    anyhow::ensure!(!x.is_empty(), "partitions are empty");
    Ok((x, y))
}

fn cmd_eval(args: &EvalArgs) -> Outcome {
    let (target, found) = comparable(&load_partition(&args.target)?, &load_partition(&args.found)?)?;
    let scores = v_measure(&target, &found)?;
    let report = EvalReport {
        nodes: target.len(),
        target_vs_found: scores,
        found_vs_target: scores.swapped(),
    };
    let mut stdout = io::stdout().lock();
    serde_json::to_writer_pretty(&mut stdout, &report).context("writing report")?;
    writeln!(stdout)?;
    Ok(())
}

fn cmd_project(args: &ProjectArgs) -> Outcome {
    let g = read_graph(&args.input)?;
    let side = match args.side {
        SideArg::Bottom => Side::Bottom,
        SideArg::Top => Side::Top,
    };
    let projection = project_with(&g, side, args.self_loops.into());
    match &args.out {
        Some(path) => {
            let mut w = create(path)?;
            write_projection(&projection, &mut w)?;
            w.flush()?;
        }
        None => {
            let mut w = BufWriter::new(io::stdout().lock());
            write_projection(&projection, &mut w)?;
            w.flush()?;
        }
    }
    Ok(())
}

fn cmd_sweep(args: &SweepArgs) -> Outcome {
    let text = fs::read_to_string(&args.config).with_context(|| format!("reading {}", args.config.display()))?;
    let mut cfg: SweepConfig = serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("invalid config {}: {e}", args.config.display())))?;
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    if args.sequential {
        cfg.execution = Execution::Sequential;
    }
    cfg.validate().map_err(|e| Failure::Usage(e.to_string()))?;
    let prefix = args
        .out
        .clone()
        .or_else(|| cfg.output.clone())
        .ok_or_else(|| Failure::Usage("no output prefix: pass --out or set `output` in the config".into()))?;
    let out = run_sweep(&cfg)?;
    let mut w = create(&with_suffix(&prefix, ".rows.csv"))?;
    write_rows(&out.rows, &mut w)?;
    w.flush()?;
    let mut w = create(&with_suffix(&prefix, ".summary.csv"))?;
    write_summary(&out.summary, &mut w)?;
    w.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Generate(a) => cmd_generate(a),
        Command::Detect(a) => cmd_detect(a),
        Command::Eval(a) => cmd_eval(a),
        Command::Project(a) => cmd_project(a),
        Command::Sweep(a) => cmd_sweep(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
