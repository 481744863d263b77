//! `kfree`: inspect graphs, generate families, replay constructions and run
//! verification campaigns.
//!
//! Exit codes: 0 success, 1 counterexample found, 2 usage or parse error,
//! 3 hamiltonian, 4 exceptional graph, 5 hypothesis failure.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use kfree::class::freeness_threshold;
use kfree::families::FamilySpec;
use kfree::graph::format::{parse_vertex_list, read_graph, write_edge_list, write_graph6, write_vertex_list, Format};
use kfree::graph::{is_petersen, AugmentedCycle};
use kfree::harness::{search_problem, verify_theorem, write_report, Filters, RunConfig, Source};
use kfree::invariants::{
    hamiltonian_cycle, independence_number, is_hamiltonian_connected, min_degree, toughness, vertex_connectivity,
    HamiltonConnectivity, Toughness,
};
use kfree::proof::{
    classify_instance_with, extend_via_outside_vertex, witness_independent_set, AlternationOutcome, ClassifyOptions,
    Frame, Mode, ProofError, Statement,
};
use kfree::{Graph, OrientedCycle, OrientedPath};
use num_rational::Ratio;
use std::fmt;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_HAMILTONIAN: u8 = 3;
const EXIT_EXCEPTIONAL: u8 = 4;
const EXIT_HYPOTHESIS: u8 = 5;

#[derive(Parser)]
#[command(name = "kfree", version, about = "Hamiltonicity tools for (K2 ∪ kK1)-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print invariants and hypothesis checks for one graph.
    Check {
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
    },
    /// Write a named graph to standard output.
    Gen {
        /// petersen, complete, cycle, path, kbipartite, gfamily or pattern.
        family: String,
        params: Vec<usize>,
        #[arg(long, value_enum, default_value = "graph6")]
        format: FormatArg,
    },
    /// Check a theorem or equivalence over enumerated or sampled graphs.
    Verify(CampaignArgs),
    /// Search for counterexamples to one of the open problems.
    Search(CampaignArgs),
    /// Extract the large independent set of a non-hamiltonian graph.
    Witness {
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "cycle")]
        mode: ModeArg,
        /// Path start, with `--mode path`.
        #[arg(long, required_if_eq("mode", "path"))]
        a: Option<usize>,
        /// Path end, with `--mode path`.
        #[arg(long, required_if_eq("mode", "path"))]
        b: Option<usize>,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
    },
    /// Try to lengthen a given cycle (or path with `--path`) through a vertex
    /// off it.
    Extend {
        input: PathBuf,
        /// File (or `-`) holding whitespace-separated vertices in cyclic (or path) order.
        cycle: PathBuf,
        #[arg(long)]
        k: usize,
        /// Treat the vertex list as an a–b path.
        #[arg(long)]
        path: bool,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
    },
}

#[derive(Args)]
struct CampaignArgs {
    id: String,
    #[arg(long)]
    k: usize,
    /// Smallest order enumerated or sampled.
    #[arg(long)]
    n_min: Option<usize>,
    /// Largest order enumerated or sampled.
    #[arg(long, required_unless_present = "sample")]
    n_max: Option<usize>,
    /// Number of random graphs instead of exhaustive enumeration.
    #[arg(long, requires = "seed")]
    sample: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Edge probability for sampling.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Enumerate connected graphs only.
    #[arg(long)]
    connected: bool,
    #[arg(long)]
    min_degree: Option<usize>,
    #[arg(long)]
    min_connectivity: Option<usize>,
    /// Add the Petersen graph to the source.
    #[arg(long)]
    with_petersen: bool,
    /// Extra graph files added to the source.
    #[arg(long)]
    include: Vec<PathBuf>,
    /// Allow exhaustive enumeration of order 10.
    #[arg(long)]
    long_run: bool,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Report destination; standard output when absent.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    #[value(alias = "el")]
    EdgeList,
    #[value(alias = "g6")]
    Graph6,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::EdgeList => Format::EdgeList,
            FormatArg::Graph6 => Format::Graph6,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Cycle,
    Path,
}

#[derive(Debug)]
struct Coded {
    code: u8,
    message: String,
}

impl fmt::Display for Coded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for Coded {}

fn coded(code: u8, message: impl Into<String>) -> anyhow::Error {
    anyhow!(Coded { code, message: message.into() })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(e.downcast_ref::<Coded>().map_or(EXIT_USAGE, |c| c.code))
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Check { input, k, format } => check(&input, k, format),
        Command::Gen { family, params, format } => gen(&family, &params, format),
        Command::Verify(args) => campaign(args, false),
        Command::Search(args) => campaign(args, true),
        Command::Witness { input, k, mode, a, b, format } => witness(&input, k, mode, a, b, format),
        Command::Extend { input, cycle, k, path, format } => extend(&input, &cycle, k, path, format),
    }
}

fn read_bytes(path: &Path) -> Result<Vec<u8>> {
    if path == Path::new("-") {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf).context("reading standard input")?;
        return Ok(buf);
    }
    std::fs::read(path).with_context(|| format!("reading {}", path.display()))
}

fn load_graph(path: &Path, format: Option<FormatArg>) -> Result<Graph> {
    let bytes = read_bytes(path)?;
    read_graph(&bytes, format.map(Format::from)).with_context(|| format!("parsing {}", path.display()))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn check(input: &Path, k: usize, format: Option<FormatArg>) -> Result<u8> {
    if k == 0 {
        bail!("k must be at least 1");
    }
    let g = load_graph(input, format)?;
    let n = g.order();
    let hamiltonian = hamiltonian_cycle(&g)?;
    let tough = toughness(&g)?;
    println!("n: {n}");
    println!("m: {}", g.size());
    println!("min-degree: {}", min_degree(&g)?);
    println!("connectivity: {}", vertex_connectivity(&g));
    println!("independence: {}", independence_number(&g)?.alpha);
    if tough.disconnected {
        println!("toughness: 0 (disconnected)");
    } else {
        println!("toughness: {}", tough.value);
    }
    println!("freeness-threshold: {}", freeness_threshold(&g)?);
    println!("hamiltonian: {}", yes_no(hamiltonian.is_some()));
    match is_hamiltonian_connected(&g)? {
        HamiltonConnectivity::Connected => println!("hamiltonian-connected: yes"),
        HamiltonConnectivity::FailingPair(a, b) => println!("hamiltonian-connected: no ({a} {b})"),
    }
    let one = Ratio::from_integer(1);
    println!("1-tough: {}", yes_no(!tough.disconnected && tough.value.at_least(one)));
    println!("tough-above-1: {}", yes_no(!tough.disconnected && tough.value > Toughness::Finite(one)));
    let opts = ClassifyOptions { short_circuit: false, ..ClassifyOptions::default() };
    for statement in [Statement::FreeHamiltonian, Statement::FreeConnected] {
        if !statement.accepts_k(k) {
            continue;
        }
        let c = classify_instance_with(&g, k, statement, &opts)?;
        let parts: Vec<String> = c
            .hypotheses
            .iter()
            .map(|h| format!("{}={}", h.name, h.holds.map_or("unknown", yes_no)))
            .collect();
        println!("{} hypotheses (k={k}): {}", statement.id(), parts.join(" "));
        println!("{} verdict: {:?}", statement.id(), c.verdict);
    }
    if is_petersen(&g) {
        println!("exceptional: Petersen");
    }
    Ok(0)
}

fn gen(family: &str, params: &[usize], format: FormatArg) -> Result<u8> {
    let g = FamilySpec::parse(family, params)?.build()?;
    match format {
        FormatArg::Graph6 => println!("{}", write_graph6(&g)),
        FormatArg::EdgeList => print!("{}", write_edge_list(&g)),
    }
    Ok(0)
}

fn campaign(args: CampaignArgs, problem: bool) -> Result<u8> {
    let statement: Statement = args.id.parse()?;
    if statement.is_problem() != problem {
        let wanted = if problem { "search takes 1.5 or 1.6" } else { "verify does not take 1.5 or 1.6" };
        bail!("{}: {wanted}", statement.id());
    }
    if !statement.accepts_k(args.k) {
        bail!("statement {} does not apply with k = {}", statement.id(), args.k);
    }
    if !(0.0..=1.0).contains(&args.p) {
        bail!("probability {} outside [0, 1]", args.p);
    }
    let mut sources = Vec::new();
    match args.sample {
        Some(count) => {
            let seed = args.seed.ok_or_else(|| anyhow!("--sample needs --seed"))?;
            let n_min = args.n_min.unwrap_or(4);
            let n_max = args.n_max.unwrap_or(12);
            if n_min > n_max {
                bail!("empty order range {n_min}..={n_max}");
            }
            sources.push(Source::Sample { count, n_min, n_max, p: args.p, seed });
        }
        None => {
            let n_max = args.n_max.ok_or_else(|| anyhow!("either --n-max or --sample is required"))?;
            let filters = Filters {
                connected: args.connected,
                min_degree: args.min_degree,
                max_degree: None,
                min_connectivity: args.min_connectivity,
            };
            sources.push(Source::Exhaustive { n_min: args.n_min.unwrap_or(1), n_max, filters });
        }
    }
    let mut extra = Vec::new();
    if args.with_petersen {
        extra.push(kfree::families::petersen());
    }
    for path in &args.include {
        extra.push(load_graph(path, None)?);
    }
    if !extra.is_empty() {
        sources.push(Source::Graphs(extra));
    }
    let cfg = RunConfig { jobs: args.jobs.max(1), long_run: args.long_run, ..RunConfig::default() };
    let report = if problem {
        search_problem(statement, args.k, &sources, &cfg)?
    } else {
        verify_theorem(statement, args.k, &sources, &cfg)?
    };
    match &args.output {
        Some(path) => {
            write_report(&report, path).with_context(|| format!("writing {}", path.display()))?;
        }
        None => print!("{}", report.to_json()),
    }
    eprintln!(
        "{} k={}: scanned {}, hypotheses {}, conclusion {}, exceptions {}, counterexamples {}",
        report.id,
        report.k,
        report.scanned,
        report.hypotheses_ok,
        report.conclusion_ok,
        report.exceptions.len(),
        report.counterexamples.len()
    );
    Ok(if report.counterexamples.is_empty() { 0 } else { EXIT_COUNTEREXAMPLE })
}

fn proof_exit(e: ProofError) -> anyhow::Error {
    let code = match e {
        ProofError::Hamiltonian | ProofError::SpanningPath(..) | ProofError::NoOutsideVertex => EXIT_HAMILTONIAN,
        ProofError::Exceptional => EXIT_EXCEPTIONAL,
        ProofError::HypothesisFailure(_) | ProofError::NontrivialComponent(_) => EXIT_HYPOTHESIS,
        _ => EXIT_USAGE,
    };
    coded(code, e.to_string())
}

fn witness(
    input: &Path,
    k: usize,
    mode: ModeArg,
    a: Option<usize>,
    b: Option<usize>,
    format: Option<FormatArg>,
) -> Result<u8> {
    let mode = match (mode, a, b) {
        (ModeArg::Cycle, None, None) => Mode::Cycle,
        (ModeArg::Cycle, ..) => bail!("--a and --b only apply with --mode path"),
        (ModeArg::Path, Some(a), Some(b)) => Mode::Path { a, b },
        (ModeArg::Path, ..) => bail!("--mode path needs --a and --b"),
    };
    let g = load_graph(input, format)?;
    let w = witness_independent_set(&g, k, mode).map_err(proof_exit)?;
    let half = w.n as f64 / 2.0;
    let relation = if 2 * w.len() > w.n { ">" } else { ">=" };
    println!("independent set: {}", write_vertex_list(&w.set));
    println!("size: {} {relation} {half}", w.len());
    println!("frame: {}", write_vertex_list(&w.frame));
    println!("outside vertex: {}", w.x);
    Ok(0)
}

fn extend(input: &Path, cycle: &Path, k: usize, path: bool, format: Option<FormatArg>) -> Result<u8> {
    if k < 2 {
        bail!("k must be at least 2");
    }
    let g = load_graph(input, format)?;
    let text = String::from_utf8(read_bytes(cycle)?).context("cycle file is not UTF-8")?;
    let vertices = parse_vertex_list(&text).with_context(|| format!("parsing {}", cycle.display()))?;
    let frame = if path {
        let p = OrientedPath::new(&g, vertices).context("not a path of the graph")?;
        Frame::Path(AugmentedCycle::new(p).context("path too short to close")?)
    } else {
        Frame::Cycle(OrientedCycle::new(&g, vertices).context("not a cycle of the graph")?)
    };
    let report = extend_via_outside_vertex(&g, &frame, k).map_err(proof_exit)?;
    match report.outcome {
        AlternationOutcome::LongerCycle(e) => {
            println!("extended by {}: {} -> {} vertices", e.template.name(), frame.len(), e.result.len());
            println!("{}", write_vertex_list(e.result.vertices()));
        }
        AlternationOutcome::Alternating { in_nx } => {
            println!("no extension: alternating");
            println!("frame vertices in N(X): {}", write_vertex_list(&in_nx));
        }
        AlternationOutcome::PetersenDetected => println!("no extension: Petersen endgame"),
        AlternationOutcome::FreenessViolation(w) => {
            println!("no extension: induced K2 ∪ {k}K1 on {}", write_vertex_list(&w.vertices()));
        }
        AlternationOutcome::Stuck { edge, reason } => {
            println!("no extension: stuck at edge {} {}: {reason}", edge.0, edge.1);
        }
    }
    for d in &report.diagnostics {
        println!(
            "anchor {}: pred-in-X {} succ-in-Y {} {}",
            d.index,
            write_vertex_list(&d.pred_in_x),
            write_vertex_list(&d.succ_in_y),
            if d.consistent() { "consistent" } else { "inconsistent" }
        );
    }
    Ok(0)
}
