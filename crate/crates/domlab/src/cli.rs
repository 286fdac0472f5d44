//! Command-line front end: generate families as graph6, solve parameters to
//! JSON lines, replay claim verifications, and hunt the conjectures.
//!
//! Exit codes: 0 success/PASS, 1 usage or input error (and FAIL verdicts),
//! 2 conjecture finding.

use std::fs;
use std::io::{self, Read as _};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::enumerate::{enumerate_connected_graphs, enumerate_trees, ENUM_MAX_ORDER};
use crate::error::{Error, Result};
use crate::families::{self, FamilySpec};
use crate::graph::Graph;
use crate::graph6::{emit_graph6, parse_graph6};
use crate::solve::{solve, DomKind, DomValue};
use crate::verify;

#[derive(Parser)]
#[command(name = "domlab", version, about = "exact [1,2]-domination laboratory")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Worker threads for per-graph work
    #[arg(long, global = true, env = "DOMLAB_JOBS", default_value_t = 1)]
    jobs: usize,
    /// Write output here instead of stdout
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit graphs of a named family as graph6 lines
    Gen(GenArgs),
    /// Compute domination parameters for graph6 input, one JSON line each
    Solve(SolveArgs),
    /// Replay a claim over a corpus and print its report
    Verify(VerifyArgs),
    /// Search a conjecture for counterexamples
    Hunt(HuntArgs),
}

#[derive(Args)]
struct GenArgs {
    /// One of: path, cycle, complete, complete-bipartite, corona-path,
    /// double-corona, corona-k1, f-nk, f-k, h-nk, g-pk, middle-levels,
    /// random-regular
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    /// Host graph as a graph6 line (corona families)
    #[arg(long)]
    host: Option<String>,
    #[arg(long, env = "DOMLAB_SEED", default_value_t = 1)]
    seed: u64,
    /// Number of graphs to emit (random-regular: seeds seed, seed+1, ...)
    #[arg(long, default_value_t = 1)]
    count: usize,
}

#[derive(Args)]
struct SolveArgs {
    /// graph6 file; stdin when omitted
    #[arg(long)]
    input: Option<PathBuf>,
    /// Comma-separated subset of gamma,gamma_t,gamma_12,gamma_t12
    #[arg(long)]
    kinds: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// L2.1, T2.3-bound, T2.3-claims, T2.3-extremal, T2.5-bound,
    /// T2.5-claims, P2.4-6-7, T3.1, T4.1, T4.2, T4.5, ML
    claim_id: String,
    /// Enumerated corpus cap (or parameter grid cap, depending on the claim)
    #[arg(long, default_value_t = 7)]
    nmax: usize,
    /// Use this graph6 file as the corpus instead of enumerating
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct HuntArgs {
    /// C1, C2 or C3
    conjecture: String,
    /// graph6 corpus file
    #[arg(long)]
    file: Option<PathBuf>,
    /// Sample random regular graphs instead of reading a file
    #[arg(long)]
    random: bool,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, env = "DOMLAB_SEED", default_value_t = 1)]
    seed: u64,
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    let jobs = cli.jobs.max(1);
    let mut out: Box<dyn io::Write> = match &cli.output {
        Some(path) => match fs::File::create(path) {
            Ok(f) => Box::new(f),
            Err(e) => {
                eprintln!("domlab: cannot open {}: {e}", path.display());
                return 1;
            }
        },
        None => Box::new(io::stdout()),
    };
    let code = match &cli.cmd {
        Cmd::Gen(args) => cmd_gen(args, &mut out),
        Cmd::Solve(args) => cmd_solve(args, jobs, &mut out),
        Cmd::Verify(args) => cmd_verify(args, &mut out),
        Cmd::Hunt(args) => cmd_hunt(args, &mut out),
    };
    match code {
        Ok(c) => c,
        Err(e) => {
            eprintln!("domlab: {e}");
            1
        }
    }
}

fn cmd_gen(args: &GenArgs, out: &mut dyn io::Write) -> Result<i32> {
    let need = |name: &str, v: Option<usize>| {
        v.ok_or_else(|| Error::Parameter(format!("--{name} is required for this family")))
    };
    let host = |s: &Option<String>| -> Result<Graph> {
        match s {
            Some(line) => parse_graph6(line),
            None => Err(Error::Parameter("--host is required for this family".into())),
        }
    };
    for i in 0..args.count {
        let spec = match args.family.to_lowercase().replace('_', "-").as_str() {
            "path" => FamilySpec::Path { n: need("n", args.n)? },
            "cycle" => FamilySpec::Cycle { n: need("n", args.n)? },
            "complete" => FamilySpec::Complete { n: need("n", args.n)? },
            "complete-bipartite" => {
                FamilySpec::CompleteBipartite { a: need("a", args.a)?, b: need("b", args.b)? }
            }
            "corona-path" => {
                FamilySpec::CoronaPath { host: host(&args.host)?, k: need("k", args.k)? }
            }
            "double-corona" => {
                FamilySpec::DoubleCoronaPath { host: host(&args.host)?, k: need("k", args.k)? }
            }
            "corona-k1" => FamilySpec::CoronaK1 { host: host(&args.host)? },
            "f-nk" => FamilySpec::FNk { n: need("n", args.n)?, k: need("k", args.k)? },
            "f-k" => FamilySpec::FK { k: need("k", args.k)? },
            "h-nk" => FamilySpec::HNk { n: need("n", args.n)?, k: need("k", args.k)? },
            "g-pk" => FamilySpec::GPk { p: need("p", args.p)?, k: need("k", args.k)? },
            "middle-levels" => FamilySpec::MiddleLevels {
                n: need("n", args.n)?,
                a: need("a", args.a)?,
                b: need("b", args.b)?,
            },
            "random-regular" => FamilySpec::RandomRegular {
                n: need("n", args.n)?,
                k: need("k", args.k)?,
                seed: args.seed + i as u64,
            },
            other => return Err(Error::Parameter(format!("unknown family '{other}'"))),
        };
        let g = spec.generate()?;
        writeln!(out, "{}", emit_graph6(&g)).map_err(io_err)?;
    }
    Ok(0)
}

fn io_err(e: io::Error) -> Error {
    Error::Parameter(format!("i/o error: {e}"))
}

fn parse_kinds(spec: &Option<String>) -> Result<Vec<DomKind>> {
    let Some(spec) = spec else {
        return Ok(DomKind::ALL.to_vec());
    };
    let mut kinds = Vec::new();
    for name in spec.split(',') {
        let kind = DomKind::ALL
            .into_iter()
            .find(|k| k.label() == name.trim())
            .ok_or_else(|| Error::Parameter(format!("unknown parameter kind '{name}'")))?;
        if !kinds.contains(&kind) {
            kinds.push(kind);
        }
    }
    Ok(kinds)
}

/// Reads graph6 lines, skipping blanks; errors carry 1-based line numbers.
fn read_corpus(input: Option<&PathBuf>) -> Result<Vec<Graph>> {
    let text = match input {
        Some(path) => fs::read_to_string(path).map_err(io_err)?,
        None => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf).map_err(io_err)?;
            buf
        }
    };
    let mut graphs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let g = parse_graph6(line)
            .map_err(|e| Error::Parameter(format!("line {}: {e}", i + 1)))?;
        graphs.push(g);
    }
    Ok(graphs)
}

fn solve_record(g: &Graph, kinds: &[DomKind]) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("n".into(), json!(g.n()));
    for &kind in kinds {
        match solve(g, kind) {
            Ok(res) => {
                let v = match res.value {
                    DomValue::Finite(k) => json!(k),
                    DomValue::Infinite => json!("infinity"),
                };
                obj.insert(kind.label().into(), v);
                if kind == DomKind::TotalOneTwo {
                    if let Some(w) = res.witness {
                        obj.insert("witness".into(), json!(w.to_vec()));
                    }
                }
            }
            Err(e) => {
                // size caps and the like are per-graph soft errors
                obj.insert("error".into(), json!(e.to_string()));
                break;
            }
        }
    }
    Value::Object(obj)
}

fn cmd_solve(args: &SolveArgs, jobs: usize, out: &mut dyn io::Write) -> Result<i32> {
    let kinds = parse_kinds(&args.kinds)?;
    let graphs = read_corpus(args.input.as_ref())?;
    let records: Vec<Value> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Parameter(format!("thread pool: {e}")))?;
        pool.install(|| graphs.par_iter().map(|g| solve_record(g, &kinds)).collect())
    } else {
        graphs.iter().map(|g| solve_record(g, &kinds)).collect()
    };
    for rec in records {
        writeln!(out, "{rec}").map_err(io_err)?;
    }
    Ok(0)
}

fn connected_corpus(n_max: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=n_max.min(ENUM_MAX_ORDER) {
        out.extend(enumerate_connected_graphs(n, |_| true)?);
    }
    Ok(out)
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn io::Write) -> Result<i32> {
    let corpus = |n_max: usize| -> Result<Vec<Graph>> {
        match &args.file {
            Some(path) => read_corpus(Some(path)),
            None => connected_corpus(n_max),
        }
    };
    let report = match args.claim_id.as_str() {
        "L2.1" => verify::verify_lemma_2_1(args.nmax)?,
        "T2.3-bound" => verify::verify_bound_4n5(&corpus(args.nmax)?)?,
        "T2.3-claims" => verify::verify_claims_4n5(&corpus(args.nmax)?)?,
        "T2.3-extremal" => verify::verify_extremal(&corpus(args.nmax)?)?,
        "T2.5-bound" => verify::verify_bound_2n3(&corpus(args.nmax)?)?,
        "T2.5-claims" => verify::verify_claims_2n3(&corpus(args.nmax)?)?,
        "P2.4-6-7" => verify::verify_props_2_4_6_7(args.nmax)?,
        "T3.1" => {
            let trees: Vec<Graph> = match &args.file {
                Some(path) => read_corpus(Some(path))?,
                None => {
                    let mut trees = Vec::new();
                    for n in 3..=args.nmax.min(crate::enumerate::TREE_ENUM_MAX_ORDER) {
                        trees.extend(enumerate_trees(n)?);
                    }
                    trees
                }
            };
            let mut general = corpus(args.nmax)?;
            general.push(families::family_g_pk(5, 3)?);
            verify::verify_thm_3_1(&trees, &general)?
        }
        "T4.1" => verify::verify_thm_4_1(&corpus(args.nmax)?)?,
        "T4.2" => verify::verify_thm_4_2(&corpus(args.nmax)?)?,
        "T4.5" => verify::verify_p4_free(&corpus(args.nmax)?)?,
        "ML" => verify::explore_middle_levels(args.nmax)?,
        other => return Err(Error::Parameter(format!("unknown claim id '{other}'"))),
    };
    writeln!(out, "{}", serde_json::to_string(&report).expect("report serializes")).map_err(io_err)?;
    Ok(if report.passed() { 0 } else { 1 })
}

fn cmd_hunt(args: &HuntArgs, out: &mut dyn io::Write) -> Result<i32> {
    let which = match args.conjecture.as_str() {
        "C1" => 1,
        "C2" => 2,
        "C3" => 3,
        other => return Err(Error::Parameter(format!("unknown conjecture '{other}'"))),
    };
    let corpus: Vec<Graph> = if args.random {
        let n = args
            .n
            .ok_or_else(|| Error::Parameter("--n is required with --random".into()))?;
        let degree = match which {
            1 => 3,
            2 => 4,
            _ => 5,
        };
        (0..args.samples)
            .map(|i| families::random_regular(n, degree, args.seed + i as u64))
            .collect::<Result<_>>()?
    } else {
        match &args.file {
            Some(path) => read_corpus(Some(path))?,
            None => return Err(Error::Parameter("one of --file or --random is required".into())),
        }
    };
    let report = verify::hunt_conjectures(which, &corpus)?;
    writeln!(out, "{}", serde_json::to_string(&report).expect("report serializes")).map_err(io_err)?;
    if !report.passed() {
        Ok(1)
    } else if report.findings.is_empty() {
        Ok(0)
    } else {
        Ok(2)
    }
}
