//! Command-line front end: solve instances with the cut-based pipeline,
//! cross-check against the exhaustive reference, and generate seeded random
//! instances.
//!
//! Exit codes: 0 solved, 1 infeasible, 2 bad input, 3 instance too large for
//! the reference solver, 4 check mismatch.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use num_rational::Rational64;
use serde::Serialize;

use arbocut::arborescence::{min_cost_arborescence, root_set};
use arbocut::blocker::{covering_tight_arborescences, solve_blocker, BlockerResult};
use arbocut::graph::{ArcAttribute, ArcId, Digraph, LaminarFamily, NodeId, NodeSet};
use arbocut::oracle::{oracle_blocker, oracle_gamma, oracle_min_arborescence};
use arbocut::Error;

use arbocut_cli::instance::{
    exact_ratio, parse_instance, print_instance, scale_to_integers, ExactNumber, Instance,
    ParseError, Problem,
};

/// Label given to the root adjoined by `--global`.
const GLOBAL_ROOT_LABEL: &str = "__global_root__";

#[derive(Parser)]
#[command(
    name = "arbocut",
    version,
    about = "Blocking sets for minimum-cost rooted arborescences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file with the cut-based pipeline.
    Solve(RunArgs),
    /// Solve an instance file with the exhaustive reference (small inputs).
    Oracle(RunArgs),
    /// Solve one instance both ways and compare the optima.
    Check(CheckArgs),
    /// Print a seeded random instance.
    Gen(GenArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Instance file (JSON).
    #[arg(long)]
    input: PathBuf,
    /// Override the problem stored in the instance.
    #[arg(long, value_enum)]
    problem: Option<Problem>,
    /// Root-free variant: adjoin a fresh root connected to every node at
    /// prohibitive cost and weight, so any root is allowed.
    #[arg(long)]
    global: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 5)]
    nodes: usize,
    #[arg(long, default_value_t = 10)]
    arcs: usize,
    /// Costs are drawn uniformly from 0..=max-cost.
    #[arg(long, default_value_t = 4)]
    max_cost: i64,
    /// Weights are drawn uniformly from 1..=max-weight.
    #[arg(long, default_value_t = 5)]
    max_weight: i64,
    #[arg(long, value_enum, default_value_t = Problem::TightBlocker)]
    problem: Problem,
}

#[derive(Args)]
struct CheckArgs {
    /// Check this instance file instead of a generated one.
    #[arg(long)]
    input: Option<PathBuf>,
    #[command(flatten)]
    gen: GenArgs,
    #[arg(long)]
    global: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

enum Failure {
    Infeasible(String),
    Parse(String),
    Resource(String),
    Mismatch(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Infeasible(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Resource(_) => 3,
            Failure::Mismatch(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Infeasible(m)
            | Failure::Parse(m)
            | Failure::Resource(m)
            | Failure::Mismatch(m) => m,
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e.0)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match &e {
            Error::NoArborescence(_) => Failure::Infeasible(e.to_string()),
            Error::InvalidArgument(_) => Failure::Parse(e.to_string()),
            Error::ResourceLimit(_) => Failure::Resource(e.to_string()),
        }
    }
}

#[derive(Serialize)]
struct Certificate {
    #[serde(rename = "F")]
    member: Vec<String>,
    #[serde(rename = "Z1")]
    z1: Vec<String>,
    #[serde(rename = "Z2")]
    z2: Vec<String>,
}

#[derive(Serialize)]
struct Report {
    optimum: ExactNumber,
    arcs: Vec<u64>,
    certificate: Option<Certificate>,
    runtime_ms: u64,
    mincut_calls: u64,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Engine {
    Fast,
    Reference,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Solve(args) => {
            let report = run_instance(&load(&args)?, args.global, Engine::Fast)?;
            emit(&report, args.output);
            Ok(())
        }
        Command::Oracle(args) => {
            let report = run_instance(&load(&args)?, args.global, Engine::Reference)?;
            emit(&report, args.output);
            Ok(())
        }
        Command::Check(args) => cmd_check(args),
        Command::Gen(args) => {
            let inst = generate_instance(&args)?;
            print!("{}", print_instance(&inst));
            Ok(())
        }
    }
}

fn load(args: &RunArgs) -> Result<Instance, Failure> {
    let text = fs::read_to_string(&args.input)
        .map_err(|e| Failure::Parse(format!("cannot read {}: {e}", args.input.display())))?;
    let mut inst = parse_instance(&text)?;
    if let Some(p) = args.problem {
        inst.problem = p;
    }
    Ok(inst)
}

/// The instance on the solver's integer grid, with the `--global` root
/// already adjoined when requested.
struct Prepared {
    d: Digraph,
    c: ArcAttribute,
    w: ArcAttribute,
    root: Option<NodeId>,
    labels: Vec<String>,
    /// Arc ids at or above this are synthetic root arcs.
    synthetic_from: Option<u64>,
    cost_scale: i64,
    weight_scale: i64,
}

fn checked_sum(values: impl Iterator<Item = i64>) -> Result<i64, Failure> {
    let mut total = 0i64;
    for v in values {
        total = total
            .checked_add(v)
            .ok_or_else(|| Failure::Parse("attribute values overflow 64 bits".into()))?;
    }
    Ok(total)
}

fn prepare(inst: &Instance, global: bool) -> Result<Prepared, Failure> {
    let (c, cost_scale) = scale_to_integers(&inst.digraph, &inst.costs)?;
    let (w, weight_scale) = scale_to_integers(&inst.digraph, &inst.weights)?;
    if !global {
        return Ok(Prepared {
            d: inst.digraph.clone(),
            c,
            w,
            root: inst.root,
            labels: inst.labels.clone(),
            synthetic_from: None,
            cost_scale,
            weight_scale,
        });
    }

    if inst.problem == Problem::TightBlocker {
        return Err(Failure::Parse(
            "--global applies only to the rooted problems".into(),
        ));
    }
    if inst.labels.iter().any(|l| l == GLOBAL_ROOT_LABEL) {
        return Err(Failure::Parse(format!(
            "node label {GLOBAL_ROOT_LABEL:?} is reserved for --global"
        )));
    }
    if root_set(&inst.digraph).is_empty() {
        return Err(Failure::Infeasible(
            "no node can root a spanning arborescence".into(),
        ));
    }

    let d = &inst.digraph;
    let n = d.node_count();
    let base = d.arcs().iter().map(|a| a.id.0 + 1).max().unwrap_or(0);
    // One synthetic arc is always cheaper than any real deviation plus a
    // second synthetic arc, and never worth deleting.
    let cost_cap = checked_sum(d.arcs().iter().map(|a| c.get(a.id).abs()))?
        .checked_mul(2)
        .and_then(|s| s.checked_add(1))
        .ok_or_else(|| Failure::Parse("costs overflow the root reduction".into()))?;
    let weight_cap = checked_sum(d.arcs().iter().map(|a| w.get(a.id).abs()))?
        .checked_add(1)
        .ok_or_else(|| Failure::Parse("weights overflow the root reduction".into()))?;

    let mut arcs: Vec<(ArcId, NodeId, NodeId)> =
        d.arcs().iter().map(|a| (a.id, a.tail, a.head)).collect();
    let mut c_pairs: Vec<(ArcId, i64)> = d.arcs().iter().map(|a| (a.id, c.get(a.id))).collect();
    let mut w_pairs: Vec<(ArcId, i64)> = d.arcs().iter().map(|a| (a.id, w.get(a.id))).collect();
    for v in 0..n {
        let id = ArcId(base + v as u64);
        arcs.push((id, n, v));
        c_pairs.push((id, cost_cap));
        w_pairs.push((id, weight_cap));
    }
    let dd = Digraph::with_arc_ids(n + 1, arcs).map_err(Failure::from)?;
    let cc = ArcAttribute::from_pairs(&dd, c_pairs).map_err(Failure::from)?;
    let ww = ArcAttribute::from_pairs(&dd, w_pairs).map_err(Failure::from)?;
    let mut labels = inst.labels.clone();
    labels.push(GLOBAL_ROOT_LABEL.to_string());
    Ok(Prepared {
        d: dd,
        c: cc,
        w: ww,
        root: Some(n),
        labels,
        synthetic_from: Some(base),
        cost_scale,
        weight_scale,
    })
}

fn require_root(p: &Prepared) -> Result<NodeId, Failure> {
    p.root.ok_or_else(|| {
        Failure::Parse("this problem needs a root in the instance (or --global)".into())
    })
}

fn blocker_report(r: BlockerResult, p: &Prepared) -> (i64, i64, Vec<ArcId>, Option<Certificate>, u64) {
    debug_assert!(p
        .synthetic_from
        .map_or(true, |base| r.blocking_arcs.iter().all(|id| id.0 < base)));
    let certificate = r.certificate.map(|c| Certificate {
        member: label_set(&c.member, &p.labels),
        z1: label_set(&c.z1, &p.labels),
        z2: label_set(&c.z2, &p.labels),
    });
    (
        r.value,
        p.weight_scale,
        r.blocking_arcs.into_iter().collect(),
        certificate,
        r.mincut_calls,
    )
}

fn label_set(set: &NodeSet, labels: &[String]) -> Vec<String> {
    set.iter().map(|&v| labels[v].clone()).collect()
}

fn run_instance(inst: &Instance, global: bool, engine: Engine) -> Result<Report, Failure> {
    let start = Instant::now();
    let p = prepare(inst, global)?;
    let (value, scale, arcs, certificate, calls) = match (inst.problem, engine) {
        (Problem::MinArb, _) => {
            let root = require_root(&p)?;
            let b = match engine {
                Engine::Fast => min_cost_arborescence(&p.d, &p.c, root)?,
                Engine::Reference => oracle_min_arborescence(&p.d, &p.c, root)?,
            };
            let mut arcs: Vec<ArcId> = b.arcs.iter().copied().collect();
            let mut total = b.cost(&p.c);
            if let Some(base) = p.synthetic_from {
                let synthetic: Vec<ArcId> =
                    arcs.iter().copied().filter(|id| id.0 >= base).collect();
                debug_assert_eq!(synthetic.len(), 1);
                for id in &synthetic {
                    total -= p.c.get(*id);
                }
                arcs.retain(|id| id.0 < base);
            }
            (total, p.cost_scale, arcs, None, 0)
        }
        (Problem::Blocker, Engine::Fast) => {
            let root = require_root(&p)?;
            blocker_report(solve_blocker(&p.d, &p.c, &p.w, root)?, &p)
        }
        (Problem::Blocker, Engine::Reference) => {
            let root = require_root(&p)?;
            let (value, set) = oracle_blocker(&p.d, &p.c, &p.w, root)?;
            (value, p.weight_scale, set.into_iter().collect(), None, 0)
        }
        (Problem::TightBlocker, Engine::Fast) => blocker_report(
            covering_tight_arborescences(&p.d, &inst.laminar, &p.w)?,
            &p,
        ),
        (Problem::TightBlocker, Engine::Reference) => {
            let value = oracle_gamma(&p.d, &inst.laminar, &p.w)?;
            (value, p.weight_scale, Vec::new(), None, 0)
        }
    };
    Ok(Report {
        optimum: exact_ratio(value, scale),
        arcs: arcs.iter().map(|id| id.0).collect(),
        certificate,
        runtime_ms: start.elapsed().as_millis() as u64,
        mincut_calls: calls,
    })
}

fn emit(report: &Report, format: OutputFormat) {
    match format {
        OutputFormat::Json => println!(
            "{}",
            serde_json::to_string_pretty(report).expect("report serialization cannot fail")
        ),
        OutputFormat::Text => {
            println!("optimum: {}", report.optimum);
            println!(
                "arcs: {}",
                report
                    .arcs
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            match &report.certificate {
                Some(c) => println!(
                    "certificate: F={{{}}} Z1={{{}}} Z2={{{}}}",
                    c.member.join(","),
                    c.z1.join(","),
                    c.z2.join(",")
                ),
                None => println!("certificate: none"),
            }
            println!("runtime_ms: {}", report.runtime_ms);
            println!("mincut_calls: {}", report.mincut_calls);
        }
    }
}

fn cmd_check(args: CheckArgs) -> Result<(), Failure> {
    let inst = match &args.input {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Parse(format!("cannot read {}: {e}", path.display())))?;
            parse_instance(&text)?
        }
        None => generate_instance(&args.gen)?,
    };
    let fast = run_instance(&inst, args.global, Engine::Fast);
    let reference = run_instance(&inst, args.global, Engine::Reference);
    match (fast, reference) {
        (Ok(a), Ok(b)) => {
            if a.optimum == b.optimum {
                println!("check ok: optimum {}", a.optimum);
                Ok(())
            } else {
                Err(Failure::Mismatch(format!(
                    "solver found {}, reference found {}",
                    a.optimum, b.optimum
                )))
            }
        }
        (Err(Failure::Infeasible(_)), Err(Failure::Infeasible(_))) => {
            println!("check ok: both report an infeasible instance");
            Ok(())
        }
        (Ok(_), Err(Failure::Infeasible(m))) => Err(Failure::Mismatch(format!(
            "only the reference reports infeasible: {m}"
        ))),
        (Err(Failure::Infeasible(m)), Ok(_)) => Err(Failure::Mismatch(format!(
            "only the solver reports infeasible: {m}"
        ))),
        (Err(e), _) | (_, Err(e)) => Err(e),
    }
}

fn generate_instance(g: &GenArgs) -> Result<Instance, Failure> {
    if g.nodes < 2 {
        return Err(Failure::Parse("--nodes must be at least 2".into()));
    }
    if g.max_cost < 0 {
        return Err(Failure::Parse("--max-cost must be non-negative".into()));
    }
    if g.max_weight < 1 {
        return Err(Failure::Parse("--max-weight must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
    let labels: Vec<String> = (0..g.nodes).map(|i| format!("n{i}")).collect();
    let mut pairs = Vec::with_capacity(g.arcs);
    while pairs.len() < g.arcs {
        let t = rng.gen_range(0..g.nodes);
        let h = rng.gen_range(0..g.nodes);
        if t != h {
            pairs.push((t, h));
        }
    }
    let digraph = Digraph::new(g.nodes, &pairs).map_err(Failure::from)?;
    let costs = digraph
        .arcs()
        .iter()
        .map(|a| (a.id, Rational64::from_integer(rng.gen_range(0..=g.max_cost))))
        .collect();
    let weights = digraph
        .arcs()
        .iter()
        .map(|a| (a.id, Rational64::from_integer(rng.gen_range(1..=g.max_weight))))
        .collect();
    let laminar = if g.problem == Problem::TightBlocker {
        let mut sets: Vec<NodeSet> = Vec::new();
        for _ in 0..16 {
            if sets.len() >= 4 {
                break;
            }
            let cand: NodeSet = (0..g.nodes).filter(|_| rng.gen_bool(0.4)).collect();
            if cand.is_empty() {
                continue;
            }
            let mut attempt = sets.clone();
            attempt.push(cand);
            if let Ok(fam) = LaminarFamily::new(attempt) {
                sets = fam.sets().to_vec();
            }
        }
        LaminarFamily::new(sets).expect("kept sets stay laminar")
    } else {
        LaminarFamily::empty()
    };
    let root = match g.problem {
        Problem::TightBlocker => None,
        _ => Some(0),
    };
    Ok(Instance {
        labels,
        digraph,
        costs,
        weights,
        root,
        laminar,
        problem: g.problem,
    })
}
