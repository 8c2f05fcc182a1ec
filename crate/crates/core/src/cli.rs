//! Command-line front end.
//!
//! Exit codes are a stable contract: 0 success or accept, 1 definite reject,
//! 2 inconclusive, and 10 or above for input and precondition errors (see
//! [`exit`]).

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use crate::connectivity::{
    is_2connected_digraph, is_2connected_undirected, ConnectivityWitness, Counterexample,
};
use crate::formats::{
    parse_cycle, parse_graph, write_cycle, write_digraph, write_ugraph, AnyGraph, FormatError,
    Mapping,
};
use crate::gadgets::{
    build_edge_clique_reduction, project_long_cycle, GadgetError, GadgetParams, ReductionInstance,
};
use crate::graph::validate_cycle;
use crate::harness::{
    degree_audit, named_graph, run_claim_roundtrip, Corpus, CorpusEntry, CORPUS_PRESETS,
};
use crate::solvers::{
    hamiltonian_cycle_exact, has_cycle_at_least, longest_cycle_exact, mindeg_plus_one_cycle,
    SearchBudget, SolveOutcome, SolverError,
};

pub mod exit {
    pub const OK: i32 = 0;
    pub const REJECT: i32 = 1;
    pub const INCONCLUSIVE: i32 = 2;
    pub const IO: i32 = 10;
    pub const PARSE: i32 = 11;
    pub const WRONG_KIND: i32 = 12;
    pub const NOT_TWO_CONNECTED: i32 = 13;
    pub const TOO_FEW_VERTICES: i32 = 14;
    pub const BAD_PARAMS: i32 = 15;
    pub const MINDEG_ZERO: i32 = 16;
    pub const BAD_MAPPING: i32 = 17;
    pub const PRECONDITION: i32 = 18;
}

#[derive(Debug, Parser)]
#[command(
    name = "longcycle",
    version,
    about = "Long cycles above the minimum degree: reduction, solvers, checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the edge-clique reduction of an undirected graph
    Reduce(ReduceArgs),
    /// Search a digraph for a long cycle
    Solve(SolveArgs),
    /// Check a structural property of a graph
    Check(CheckArgs),
    /// Run the end-to-end reduction verification over a corpus
    Verify(VerifyArgs),
    /// Find a cycle of length at least mindeg + 1 in a digraph
    MindegCycle(MindegCycleArgs),
    /// Print a catalog graph in graph-file format
    Named(NamedArgs),
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Maximum number of search-tree nodes
    #[arg(long)]
    pub node_limit: Option<u64>,
    /// Wall-clock limit in seconds
    #[arg(long)]
    pub time_limit: Option<f64>,
}

impl BudgetArgs {
    fn budget(&self) -> SearchBudget {
        SearchBudget {
            node_limit: self.node_limit,
            time_limit: self.time_limit.map(Duration::from_secs_f64),
        }
    }
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    #[arg(long, default_value_t = 3)]
    pub a: usize,
    /// Cliques per edge (default: 2n)
    #[arg(long)]
    pub clique_count: Option<usize>,
    /// Vertices per clique (default: 2n - a + 1)
    #[arg(long)]
    pub clique_size: Option<usize>,
}

impl ParamArgs {
    fn params(&self) -> GadgetParams {
        GadgetParams {
            a: self.a,
            clique_count: self.clique_count,
            clique_size: self.clique_size,
        }
    }
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    pub input: PathBuf,
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long)]
    pub out_graph: PathBuf,
    #[arg(long)]
    pub out_mapping: PathBuf,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("goal").required(true).args(["threshold", "longest"])))]
pub struct SolveArgs {
    pub input: PathBuf,
    /// Accept cycles of at least this length
    #[arg(long)]
    pub threshold: Option<usize>,
    /// Find a longest cycle
    #[arg(long)]
    pub longest: bool,
    #[command(flatten)]
    pub budget: BudgetArgs,
    /// Write the witness cycle here when one is found
    #[arg(long)]
    pub out_cycle: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("property").required(true).args(["two_connected", "mindeg", "validate_cycle"])))]
pub struct CheckArgs {
    pub input: PathBuf,
    #[arg(long)]
    pub two_connected: bool,
    #[arg(long)]
    pub mindeg: bool,
    #[arg(long, value_name = "CYCLE_FILE")]
    pub validate_cycle: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Built-in corpus: named-small, named-nonham, random, acceptance
    #[arg(long, default_value = "named-small")]
    pub corpus: String,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// `test` (one 3-vertex clique per edge) or `canonical`
    #[arg(long, default_value = "test")]
    pub params: String,
    #[command(flatten)]
    pub overrides: ParamArgs,
    #[command(flatten)]
    pub budget: BudgetArgs,
    /// Write PREFIX.tsv and PREFIX.json
    #[arg(long, value_name = "PREFIX")]
    pub report: Option<PathBuf>,
    /// Include wall-clock timings in the report
    #[arg(long)]
    pub timings: bool,
    /// Only audit degrees at canonical parameters, for each --a-values entry
    #[arg(long)]
    pub degree_only: bool,
    #[arg(long, value_delimiter = ',', default_value = "3,4")]
    pub a_values: Vec<usize>,
    /// Where offending instances are written for replay
    #[arg(long, default_value = "verify-failures")]
    pub dump_dir: PathBuf,
    /// Replay a reduced graph file instead of running a corpus
    #[arg(long, requires = "mapping")]
    pub instance: Option<PathBuf>,
    /// Mapping sidecar for --instance
    #[arg(long, requires = "instance")]
    pub mapping: Option<PathBuf>,
    /// Cycle of the replayed instance to project instead of searching for one
    #[arg(long, requires = "instance")]
    pub cycle: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MindegCycleArgs {
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct NamedArgs {
    pub name: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// An error that ends the command with a specific exit code.
struct Fail {
    code: i32,
    msg: String,
}

impl Fail {
    fn new(code: i32, msg: impl Into<String>) -> Self {
        Self {
            code,
            msg: msg.into(),
        }
    }
}

impl From<FormatError> for Fail {
    fn from(e: FormatError) -> Self {
        let code = match e {
            FormatError::WrongKind { .. } => exit::WRONG_KIND,
            FormatError::Json(_) => exit::BAD_MAPPING,
            _ => exit::PARSE,
        };
        Fail::new(code, e.to_string())
    }
}

impl From<GadgetError> for Fail {
    fn from(e: GadgetError) -> Self {
        let code = match e {
            GadgetError::NotTwoConnected => exit::NOT_TWO_CONNECTED,
            GadgetError::TooFewVertices { .. } => exit::TOO_FEW_VERTICES,
            GadgetError::BadParams(_) | GadgetError::NonCanonicalParams => exit::BAD_PARAMS,
            GadgetError::BadMapping(_) => exit::BAD_MAPPING,
            _ => exit::PRECONDITION,
        };
        let msg = match e {
            GadgetError::NotTwoConnected => {
                "the input graph must be 2-connected; otherwise it has no Hamiltonian cycle"
                    .to_string()
            }
            other => other.to_string(),
        };
        Fail::new(code, msg)
    }
}

type CmdResult = Result<i32, Fail>;

fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| Fail::new(exit::IO, format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<(), Fail> {
    fs::write(path, contents).map_err(|e| Fail::new(exit::IO, format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<AnyGraph, Fail> {
    parse_graph(&read(path)?).map_err(|e| {
        let mut f = Fail::from(e);
        f.msg = format!("{}: {}", path.display(), f.msg);
        f
    })
}

/// Parses `args` and runs the command; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { exit::IO } else { exit::OK };
        }
    };
    let result = match &cli.command {
        Command::Reduce(a) => cmd_reduce(a),
        Command::Solve(a) => cmd_solve(a),
        Command::Check(a) => cmd_check(a),
        Command::Verify(a) => cmd_verify(a),
        Command::MindegCycle(a) => cmd_mindeg_cycle(a),
        Command::Named(a) => cmd_named(a),
    };
    match result {
        Ok(code) => code,
        Err(Fail { code, msg }) => {
            eprintln!("error: {msg}");
            code
        }
    }
}

fn cmd_reduce(args: &ReduceArgs) -> CmdResult {
    let g = load_graph(&args.input)?.into_undirected()?;
    let r = build_edge_clique_reduction(&g, &args.params.params())?;
    write(&args.out_graph, &write_digraph(r.graph()))?;
    write(&args.out_mapping, &Mapping::of(&r).to_json())?;
    let h = r.graph();
    println!(
        "threshold={} mindeg={} |V|={} |A|={}",
        r.threshold(),
        h.mindeg()
            .map_err(|e| Fail::new(exit::PRECONDITION, e.to_string()))?,
        h.n(),
        h.arc_count()
    );
    Ok(exit::OK)
}

fn report_outcome(outcome: &SolveOutcome, out_cycle: Option<&Path>) -> CmdResult {
    match outcome {
        SolveOutcome::Found(c) => {
            if let Some(path) = out_cycle {
                write(path, &write_cycle(c.vertices()))?;
            }
            println!("FOUND {}", c.len());
            println!("{c}");
            Ok(exit::OK)
        }
        SolveOutcome::NotFound => {
            println!("NOTFOUND");
            Ok(exit::REJECT)
        }
        SolveOutcome::Unknown => {
            println!("UNKNOWN");
            Ok(exit::INCONCLUSIVE)
        }
    }
}

fn cmd_solve(args: &SolveArgs) -> CmdResult {
    let d = load_graph(&args.input)?.into_directed()?;
    let budget = args.budget.budget();
    let outcome = match args.threshold {
        Some(l) if l < 2 => {
            return Err(Fail::new(
                exit::PRECONDITION,
                "threshold must be at least 2",
            ))
        }
        Some(l) => has_cycle_at_least(&d, l, budget),
        None => longest_cycle_exact(&d, budget),
    };
    report_outcome(&outcome, args.out_cycle.as_deref())
}

fn describe(w: &ConnectivityWitness) -> String {
    match w.counterexample {
        None => "true".to_string(),
        Some(Counterexample::CutVertex(v)) => format!("false cut_vertex={v}"),
        Some(Counterexample::Pair { from, to, paths }) => {
            format!("false pair={from}->{to} paths={paths}")
        }
    }
}

fn cmd_check(args: &CheckArgs) -> CmdResult {
    let g = load_graph(&args.input)?;
    if args.two_connected {
        let w = match &g {
            AnyGraph::Undirected(u) => is_2connected_undirected(u),
            AnyGraph::Directed(d) => is_2connected_digraph(d),
        }
        .map_err(|e| Fail::new(exit::PRECONDITION, e.to_string()))?;
        println!("{}", describe(&w));
        return Ok(if w.verdict { exit::OK } else { exit::REJECT });
    }
    if args.mindeg {
        let k = match &g {
            AnyGraph::Undirected(u) => u.mindeg(),
            AnyGraph::Directed(d) => d.mindeg(),
        }
        .map_err(|e| Fail::new(exit::PRECONDITION, e.to_string()))?;
        println!("{k}");
        return Ok(exit::OK);
    }
    let path = args
        .validate_cycle
        .as_ref()
        .expect("clap enforces one property");
    let seq = parse_cycle(&read(path)?)?;
    let checked = match &g {
        AnyGraph::Undirected(u) => validate_cycle(u, &seq),
        AnyGraph::Directed(d) => validate_cycle(d, &seq),
    };
    match checked {
        Ok(c) => {
            println!("valid length={}", c.len());
            Ok(exit::OK)
        }
        Err(e) => {
            println!("invalid: {e}");
            Ok(exit::REJECT)
        }
    }
}

fn cmd_mindeg_cycle(args: &MindegCycleArgs) -> CmdResult {
    let d = load_graph(&args.input)?.into_directed()?;
    let c = mindeg_plus_one_cycle(&d).map_err(|e| match e {
        SolverError::MindegZero => Fail::new(exit::MINDEG_ZERO, e.to_string()),
        other => Fail::new(exit::PRECONDITION, other.to_string()),
    })?;
    let k = d.mindeg().expect("nonempty");
    println!("{c}");
    println!("length={} mindeg={k} bound_ok={}", c.len(), c.len() > k);
    Ok(exit::OK)
}

fn cmd_named(args: &NamedArgs) -> CmdResult {
    let g = named_graph(&args.name).map_err(|e| Fail::new(exit::PRECONDITION, e.to_string()))?;
    let text = g.to_text();
    match &args.out {
        Some(path) => write(path, &text)?,
        None => print!("{text}"),
    }
    Ok(exit::OK)
}

fn verify_params(args: &VerifyArgs) -> Result<GadgetParams, Fail> {
    let base = match args.params.as_str() {
        "test" => GadgetParams::test(args.overrides.a),
        "canonical" => GadgetParams::canonical(args.overrides.a),
        other => {
            return Err(Fail::new(
                exit::BAD_PARAMS,
                format!("unknown parameter set `{other}`"),
            ))
        }
    };
    Ok(GadgetParams {
        clique_count: args.overrides.clique_count.or(base.clique_count),
        clique_size: args.overrides.clique_size.or(base.clique_size),
        ..base
    })
}

fn dump_failure(dir: &Path, entry: &CorpusEntry, params: &GadgetParams) -> Result<(), Fail> {
    fs::create_dir_all(dir).map_err(|e| Fail::new(exit::IO, format!("{}: {e}", dir.display())))?;
    let stem = dir.join(&entry.name);
    write(
        &stem.with_extension("source.gr"),
        &write_ugraph(&entry.graph),
    )?;
    if let Ok(r) = build_edge_clique_reduction(&entry.graph, params) {
        write(
            &stem.with_extension("reduced.gr"),
            &write_digraph(r.graph()),
        )?;
        write(
            &stem.with_extension("mapping.json"),
            &Mapping::of(&r).to_json(),
        )?;
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    if let (Some(instance), Some(mapping)) = (&args.instance, &args.mapping) {
        return verify_replay(args, instance, mapping);
    }
    let corpus = Corpus::preset(&args.corpus, args.seed).map_err(|e| {
        Fail::new(
            exit::PRECONDITION,
            format!("{e}; known corpora: {}", CORPUS_PRESETS.join(", ")),
        )
    })?;
    if args.degree_only {
        let audit = degree_audit(&corpus.instances(), &args.a_values);
        println!("name\tn\ta\tmindeg\tthreshold\tok");
        for rec in &audit {
            println!(
                "{}\t{}\t{}\t{}\t{}\t{}",
                rec.name, rec.n, rec.a, rec.mindeg, rec.threshold, rec.ok
            );
            if let Some(d) = &rec.detail {
                eprintln!("{}: {d}", rec.name);
            }
        }
        return Ok(if audit.iter().all(|r| r.ok) {
            exit::OK
        } else {
            exit::REJECT
        });
    }

    let params = verify_params(args)?;
    let mut budget = args.budget.budget();
    if budget.node_limit.is_none() && budget.time_limit.is_none() {
        budget.node_limit = Some(5_000_000);
    }
    let report = run_claim_roundtrip(&corpus, &params, &budget);
    let report = if args.timings {
        report
    } else {
        report.without_timings()
    };
    if let Some(prefix) = &args.report {
        write(&prefix.with_extension("tsv"), &report.to_tsv())?;
        write(&prefix.with_extension("json"), &report.to_json())?;
    } else {
        print!("{}", report.to_tsv());
    }
    let s = &report.summary;
    println!(
        "instances={} conclusive={} violations={} ok={}",
        s.instances, s.conclusive, s.violations, s.ok
    );
    if report.all_ok() {
        return Ok(exit::OK);
    }
    let entries = corpus.instances();
    for rec in report.failures() {
        eprintln!(
            "violation: {} {}",
            rec.name,
            rec.detail.as_deref().unwrap_or("")
        );
        dump_failure(&args.dump_dir, &entries[rec.id - 1], &params)?;
    }
    eprintln!("offending instances written to {}", args.dump_dir.display());
    Ok(exit::REJECT)
}

/// Re-checks a reduced instance read back from disk: arc classification,
/// projection of a long cycle, and agreement with the recovered source.
fn verify_replay(args: &VerifyArgs, instance: &Path, mapping: &Path) -> CmdResult {
    let h = load_graph(instance)?.into_directed()?;
    let m = Mapping::from_json(&read(mapping)?)?;
    let roles = m
        .role_table()
        .map_err(|e| Fail::new(exit::BAD_MAPPING, e))?;
    let r = ReductionInstance::from_parts(h, roles, m.source_n, m.params())?;
    let mut ok = true;

    match r.classify_arcs() {
        Ok(_) => println!("arcs: ok"),
        Err(e) => {
            println!("arcs: {e}");
            ok = false;
        }
    }

    let budget = args.budget.budget();
    let long = match &args.cycle {
        Some(path) => {
            let seq = parse_cycle(&read(path)?)?;
            match validate_cycle(r.graph(), &seq) {
                Ok(c) => SolveOutcome::Found(c),
                Err(e) => return Err(Fail::new(exit::PRECONDITION, format!("cycle file: {e}"))),
            }
        }
        None => has_cycle_at_least(r.graph(), r.threshold(), budget),
    };
    if let Some(c) = long.cycle() {
        match project_long_cycle(&r, c) {
            Ok(p) => println!("projection: ok length={}", p.len()),
            Err(e) => {
                println!("projection: {e:?}: {e}");
                ok = false;
            }
        }
    }
    if args.cycle.is_none() {
        let ham = hamiltonian_cycle_exact(r.source(), budget);
        match (ham.verdict(), long.verdict()) {
            (Some(x), Some(y)) => {
                println!("equivalence: source_hamiltonian={x} long_cycle={y}");
                ok &= x == y;
            }
            _ => {
                println!("equivalence: inconclusive");
                if ok {
                    return Ok(exit::INCONCLUSIVE);
                }
            }
        }
    }
    Ok(if ok { exit::OK } else { exit::REJECT })
}
