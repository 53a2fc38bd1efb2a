//! Command-line front end.
//!
//! Every subcommand prints a single JSON document on stdout. Exit codes:
//! `0` success, `1` verification failure, `2` usage error, `3` budget
//! exhausted.

use std::io::Write;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::engine;
use crate::grid::{self, GridVerdict};
use crate::prism;
use crate::product::{parse_expression, parse_term, strong_product, Codec, ProductSpec, StrongProduct};
use crate::seeds::{self, Construction};
use crate::solver::{self, Budget, SolveOptions};
use crate::{Error, Graph, VertexSet};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "strongperc", version, about = "r-neighbor bootstrap percolation on strong products")]
pub struct Cli {
    /// Worker threads (default: available parallelism). Output does not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Simulate the synchronous process from a seed.
    Percolate(PercolateArgs),
    /// Compute m(G, r) exactly.
    Number(NumberArgs),
    /// Build and verify an explicit percolating set.
    Seed(SeedArgs),
    /// Compare the prism predicate with m(G ⊠ K2, 3).
    PrismCheck(PrismCheckArgs),
    /// Run the prism cross-check on every small connected graph.
    PrismSweep(PrismSweepArgs),
    /// Certificates on windows of the strong grid.
    Grid(GridArgs),
    /// Structural summary of a graph, or counts of small connected graphs.
    Graphs(GraphsArgs),
}

#[derive(Args, Debug)]
pub struct PercolateArgs {
    /// Product expression, e.g. "P3 x P3" or "@graph.edges".
    pub expr: String,
    #[arg(long)]
    pub r: usize,
    /// Seed vertices: flat indices or coordinate tuples such as "(0,2)".
    #[arg(long, num_args = 1.., required = true)]
    pub seed: Vec<String>,
    /// Include per-vertex infection times.
    #[arg(long)]
    pub times: bool,
}

#[derive(Args, Debug, Clone)]
pub struct BudgetArgs {
    /// Maximum number of engine invocations.
    #[arg(long)]
    pub budget_nodes: Option<u64>,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    pub budget_seconds: Option<f64>,
}

impl BudgetArgs {
    fn budget(&self) -> Result<Budget, Error> {
        let max_time = match self.budget_seconds {
            Some(s) if !(s.is_finite() && s >= 0.0) => {
                return Err(Error::ParameterRange("--budget-seconds must be a non-negative number".into()))
            }
            s => s.map(Duration::from_secs_f64),
        };
        Ok(Budget {
            max_nodes: self.budget_nodes,
            max_time,
        })
    }
}

#[derive(Args, Debug)]
pub struct NumberArgs {
    pub expr: String,
    #[arg(long)]
    pub r: usize,
    #[command(flatten)]
    pub budget: BudgetArgs,
    /// Also list every minimum percolating set.
    #[arg(long)]
    pub enumerate: bool,
    /// Disable closed-twin pruning.
    #[arg(long)]
    pub no_twin_pruning: bool,
}

#[derive(Args, Debug)]
pub struct SeedArgs {
    #[arg(long, value_enum)]
    pub construction: Construction,
    /// Threshold, for the corner and two-big constructions.
    #[arg(long)]
    pub r: Option<usize>,
    /// Product expression. For prism3 a single graph G; for r4 and r5 two factors G x H.
    #[arg(long)]
    pub expr: Option<String>,
    /// Positional form of --expr.
    #[arg(conflicts_with = "expr")]
    pub expression: Option<String>,
}

#[derive(Args, Debug)]
pub struct PrismCheckArgs {
    /// A single graph (named or @file).
    pub graph: String,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Args, Debug)]
pub struct PrismSweepArgs {
    #[arg(long, default_value_t = 6)]
    pub max_n: usize,
}

#[derive(Args, Debug)]
#[command(args_conflicts_with_subcommands = true)]
pub struct GridArgs {
    #[command(subcommand)]
    pub fpt: Option<GridCommand>,
    /// Dimension.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub box_side: Option<usize>,
    #[arg(long, default_value_t = 3)]
    pub margin: usize,
    /// Include per-round infected counts.
    #[arg(long)]
    pub rounds: bool,
}

#[derive(Subcommand, Debug)]
pub enum GridCommand {
    /// Bounds on the finiteness percolation threshold, with box probes.
    Fpt {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 6)]
        max_side: usize,
        #[arg(long, default_value_t = 3)]
        margin: usize,
        /// Only print the formulaic bounds.
        #[arg(long)]
        no_probe: bool,
    },
}

#[derive(Args, Debug)]
pub struct GraphsArgs {
    /// Product expression to summarize.
    pub expr: Option<String>,
    /// Count labeled connected graphs on this many vertices instead.
    #[arg(long, conflicts_with = "expr")]
    pub connected: Option<usize>,
    /// Include the edge list.
    #[arg(long)]
    pub edges: bool,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.unwrap_or(0))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    match pool.install(|| dispatch(&cli)) {
        Ok((value, code)) => {
            let text = serde_json::to_string_pretty(&value).expect("JSON values serialize");
            let _ = writeln!(out, "{text}");
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::VerificationFailed(_) | Error::NotPercolating => EXIT_VERIFICATION,
        Error::BudgetExhausted { .. } => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

type Outcome = Result<(Value, i32), Error>;

fn dispatch(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Percolate(a) => percolate(a),
        Command::Number(a) => number(a, cli.threads),
        Command::Seed(a) => seed(a),
        Command::PrismCheck(a) => prism_check(a),
        Command::PrismSweep(a) => prism_sweep(a),
        Command::Grid(a) => grid_cmd(a),
        Command::Graphs(a) => graphs(a),
    }
}

fn build(expr: &str) -> Result<StrongProduct, Error> {
    strong_product(&parse_expression(expr, None)?)
}

fn single_graph(expr: &str) -> Result<Graph, Error> {
    let spec = parse_expression(expr, None)?;
    if spec.k() == 1 {
        Ok(spec.factors()[0].clone())
    } else {
        Ok(strong_product(&spec)?.graph().clone())
    }
}

/// `"7"` is a flat index; `"(1,2)"` or `"1,2"` a coordinate tuple.
pub fn parse_seed_item(item: &str, codec: &Codec) -> Result<usize, Error> {
    let body = item.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Vec<&str> = body.split(',').map(str::trim).collect();
    let bad = || Error::InvalidCoordinate(item.to_string());
    let nums: Vec<usize> = parts.iter().map(|p| p.parse().map_err(|_| bad())).collect::<Result<_, _>>()?;
    let tuple_syntax = item.contains(',') || item.contains('(');
    if !tuple_syntax {
        let v = nums[0];
        if v >= codec.size() {
            return Err(Error::VertexOutOfRange { vertex: v, n: codec.size() });
        }
        return Ok(v);
    }
    codec.try_encode(&nums)
}

fn coords(codec: &Codec, set: &VertexSet) -> Value {
    json!(set.iter().map(|v| codec.decode(v)).collect::<Vec<_>>())
}

fn percolate(a: &PercolateArgs) -> Outcome {
    if a.r == 0 {
        return Err(Error::ParameterRange("--r must be at least 1".into()));
    }
    let prod = build(&a.expr)?;
    let codec = prod.codec();
    let seed = a.seed.iter().map(|s| parse_seed_item(s, codec)).collect::<Result<Vec<_>, _>>()?;
    let seed = VertexSet::from_vertices(codec.size(), seed);
    let run = engine::percolate(prod.graph(), &seed, a.r);
    let mut v = json!({
        "graph": prod.graph().to_string(),
        "r": a.r,
        "seed": seed,
        "seed_coordinates": coords(codec, &seed),
        "percolated": run.percolated,
        "rounds": run.rounds,
        "round_counts": run.round_counts,
        "infected": run.infected().len(),
    });
    if a.times {
        v["times"] = json!(run.infection_time);
    }
    Ok((v, EXIT_OK))
}

fn number(a: &NumberArgs, threads: Option<usize>) -> Outcome {
    if a.r == 0 {
        return Err(Error::ParameterRange("--r must be at least 1".into()));
    }
    let prod = build(&a.expr)?;
    let opts = SolveOptions {
        budget: a.budget.budget()?,
        twin_pruning: !a.no_twin_pruning,
        threads,
    };
    let res = if a.enumerate {
        solver::solve_and_enumerate(prod.graph(), a.r, &opts)?
    } else {
        solver::percolation_number(prod.graph(), a.r, &opts)
    };
    let codec = prod.codec();
    let mut v = json!({
        "graph": prod.graph().to_string(),
        "r": a.r,
        "m": res.m,
        "exact": res.exact,
        "lower_bound": res.lower_bound,
        "upper_bound": res.upper_bound,
        "witness": res.witness,
        "witness_coordinates": coords(codec, &res.witness),
        "forced": res.forced,
        "nodes": res.nodes_explored,
    });
    if let Some(sets) = &res.enumerated {
        v["minimum_sets"] = json!(sets);
        v["minimum_set_count"] = json!(sets.len());
    }
    Ok((v, if res.exact { EXIT_OK } else { EXIT_BUDGET }))
}

/// `C_n ⊠ K₂ ⊠ … ⊠ K₂` given as factors: returns `(n, k)`.
fn cycle_clique_shape(spec: &ProductSpec) -> Result<(usize, usize), Error> {
    let bad = || Error::Precondition("cycle-clique expects C<n> x K2 x … x K2".into());
    let cycle = &spec.factors()[0];
    let n = cycle.n();
    let expected = Graph::parse_named(&format!("C{n}")).map_err(|_| bad())?;
    let same = |a: &Graph, b: &Graph| a.n() == b.n() && a.edges().eq(b.edges());
    if spec.k() < 2 || !same(cycle, &expected) {
        return Err(bad());
    }
    let k2 = Graph::parse_named("K2")?;
    if !spec.factors()[1..].iter().all(|f| same(f, &k2)) {
        return Err(bad());
    }
    Ok((n, spec.k()))
}

fn seed(a: &SeedArgs) -> Outcome {
    let expr = a
        .expr
        .as_deref()
        .or(a.expression.as_deref())
        .ok_or_else(|| Error::ParameterRange("a product expression is required".into()))?;
    let need_r = || a.r.ok_or_else(|| Error::ParameterRange("--r is required for this construction".into()));
    let spec = parse_expression(expr, None)?;
    let two = |spec: &ProductSpec| -> Result<(Graph, Graph), Error> {
        match spec.factors() {
            [g, h] => Ok((g.clone(), h.clone())),
            _ => Err(Error::Precondition("r4 and r5 expect exactly two factors".into())),
        }
    };
    let cert = match a.construction {
        Construction::Corner => seeds::seed_corner(&spec, need_r()?)?,
        Construction::CycleClique => {
            let (n, k) = cycle_clique_shape(&spec)?;
            seeds::seed_cycle_clique(n, k)?
        }
        Construction::TwoBig => seeds::seed_two_big(&spec, need_r()?)?,
        Construction::ThreeBig => seeds::seed_three_big(&spec)?,
        Construction::AllBig => seeds::seed_all_big(&spec)?,
        Construction::Prism3 => {
            if spec.k() != 1 {
                return Err(Error::Precondition("prism3 expects a single graph G; the prism G x K2 is built internally".into()));
            }
            match seeds::seed_prism3(&spec.factors()[0])? {
                Some(c) => c,
                None => {
                    let v = json!({
                        "construction": "prism3",
                        "graph": spec.to_string(),
                        "certificate": null,
                        "reason": "m(G,2) > 3, or no minimum 2-percolating triple spans a P3 or the leaves of a K1,3",
                    });
                    return Ok((v, EXIT_OK));
                }
            }
        }
        Construction::R4 => {
            let (g, h) = two(&spec)?;
            seeds::seed_two_factor_r4(&g, &h)?
        }
        Construction::R5 => {
            let (g, h) = two(&spec)?;
            seeds::seed_two_factor_r5(&g, &h)?
        }
    };
    if let Some(r) = a.r {
        if r != cert.r && !matches!(a.construction, Construction::Corner | Construction::TwoBig) {
            return Err(Error::ParameterRange(format!(
                "this construction is verified at r = {}, not {r}",
                cert.r
            )));
        }
    }
    Ok((serde_json::to_value(&cert).expect("certificate serializes"), EXIT_OK))
}

fn prism_check(a: &PrismCheckArgs) -> Outcome {
    let g = parse_term(a.graph.trim(), None)?;
    let report = prism::prism_cross_check(&g, a.budget.budget()?)?;
    let code = if report.agree { EXIT_OK } else { EXIT_VERIFICATION };
    Ok((serde_json::to_value(&report).expect("report serializes"), code))
}

fn prism_sweep(a: &PrismSweepArgs) -> Outcome {
    if !(2..=7).contains(&a.max_n) {
        return Err(Error::ParameterRange("--max-n must lie in 2..=7".into()));
    }
    let report = prism::prism_sweep(a.max_n)?;
    let code = if report.is_clean() { EXIT_OK } else { EXIT_VERIFICATION };
    Ok((serde_json::to_value(&report).expect("report serializes"), code))
}

fn grid_cmd(a: &GridArgs) -> Outcome {
    if let Some(GridCommand::Fpt {
        n,
        max_side,
        margin,
        no_probe,
    }) = &a.fpt
    {
        if *n == 0 || *n > 6 {
            return Err(Error::ParameterRange("--n must lie in 1..=6".into()));
        }
        if *no_probe {
            let (lower, upper) = grid::fpt_bounds(*n);
            return Ok((json!({ "n": n, "lower": lower, "upper": upper }), EXIT_OK));
        }
        let report = grid::fpt_probe(*n, *max_side, *margin)?;
        return Ok((serde_json::to_value(&report).expect("report serializes"), EXIT_OK));
    }
    let missing = |flag: &str| Error::ParameterRange(format!("grid needs --{flag}"));
    let n = a.n.ok_or_else(|| missing("n"))?;
    let r = a.r.ok_or_else(|| missing("r"))?;
    let m = a.box_side.ok_or_else(|| missing("box-side"))?;
    let verdict = grid::box_expansion_test(n, r, m, a.margin)?;
    let mut v = json!({ "n": n, "r": r, "box_side": m, "margin": a.margin, "result": verdict });
    if a.rounds {
        let run = grid::grid_closure(&grid::box_seed(n, m, a.margin)?, r);
        v["round_counts"] = json!(run.round_counts);
    }
    let code = if matches!(verdict, GridVerdict::Inconclusive { .. }) { EXIT_VERIFICATION } else { EXIT_OK };
    Ok((v, code))
}

fn graphs(a: &GraphsArgs) -> Outcome {
    if let Some(n) = a.connected {
        if !(1..=6).contains(&n) {
            return Err(Error::ParameterRange("--connected must lie in 1..=6".into()));
        }
        let gs = prism::connected_graphs(n);
        let mut v = json!({ "n": n, "connected_labeled_graphs": gs.len() });
        if a.edges {
            v["graphs"] = json!(gs.iter().map(|g| g.edges().collect::<Vec<_>>()).collect::<Vec<_>>());
        }
        return Ok((v, EXIT_OK));
    }
    let expr = a.expr.as_deref().ok_or_else(|| Error::ParameterRange("give an expression or --connected".into()))?;
    let g = single_graph(expr)?;
    let mut v = json!({
        "graph": g.to_string(),
        "n": g.n(),
        "m": g.edge_count(),
        "connected": g.is_connected(),
        "min_degree": g.min_degree(),
        "max_degree": g.max_degree(),
        "cut_vertices": g.cut_vertices(),
        "twin_classes": g.closed_twin_classes(),
    });
    if a.edges {
        v["edges"] = json!(g.edges().collect::<Vec<_>>());
    }
    Ok((v, EXIT_OK))
}
