//! Exact r-percolation numbers by exhaustive search.
//!
//! Sizes are tried in increasing order starting from
//! `max(min(r, n), |forced|)`. Within a size, combinations of the
//! non-forced vertices are visited in lexicographic order, so the first hit
//! is the lexicographically least minimum percolating set. Closed twins are
//! interchangeable in a seed, so with twin pruning a vertex may only be
//! chosen if the previous member of its twin class is already chosen.
//!
//! The combination stream of one size is cut into tasks by the first two
//! chosen vertices. Tasks run in parallel batches but are accounted in
//! order, which keeps results and node counts identical for any thread
//! count.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::engine::{self, Percolator};
use crate::{Error, Graph, Result, VertexSet};

/// Search limits. A node is one engine invocation.
#[derive(Clone, Copy, Debug, Default)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget::default()
    }

    pub fn nodes(max_nodes: u64) -> Budget {
        Budget {
            max_nodes: Some(max_nodes),
            max_time: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub budget: Budget,
    pub twin_pruning: bool,
    /// `None` uses the global rayon pool; `Some(1)` runs on the calling thread.
    pub threads: Option<usize>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            budget: Budget::default(),
            twin_pruning: true,
            threads: None,
        }
    }
}

impl SolveOptions {
    pub fn sequential() -> Self {
        SolveOptions {
            threads: Some(1),
            ..Default::default()
        }
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SolveResult {
    pub r: usize,
    /// The exact value, when the search completed.
    pub m: Option<usize>,
    pub exact: bool,
    /// Every size below this was exhausted.
    pub lower_bound: usize,
    /// Size of `witness`.
    pub upper_bound: usize,
    /// Lexicographically least minimum percolating set when exact;
    /// otherwise some minimal percolating set.
    pub witness: VertexSet,
    pub forced: VertexSet,
    pub nodes_explored: u64,
    /// All minimum percolating sets, when requested.
    pub enumerated: Option<Vec<VertexSet>>,
}

/// `m(G, r)` with a witness.
pub fn percolation_number(g: &Graph, r: usize, opts: &SolveOptions) -> SolveResult {
    assert!(r >= 1, "threshold must be at least 1");
    let search = Search::new(g, r, opts.twin_pruning);
    let mut state = RunState::new(opts);
    let forced = engine::forced_vertices(g, r);
    let start = forced.len().max(r.min(g.n()));
    for size in start..=g.n() {
        match search.search_size(size, Mode::First, &mut state) {
            SizeOutcome::Found(mut sets) => {
                let witness = sets.swap_remove(0);
                return SolveResult {
                    r,
                    m: Some(size),
                    exact: true,
                    lower_bound: size,
                    upper_bound: size,
                    witness,
                    forced,
                    nodes_explored: state.nodes,
                    enumerated: None,
                };
            }
            SizeOutcome::None => {}
            SizeOutcome::OutOfBudget => {
                let witness = greedy_minimal(g, r, &mut state.nodes);
                return SolveResult {
                    r,
                    m: None,
                    exact: false,
                    lower_bound: size,
                    upper_bound: witness.len(),
                    witness,
                    forced,
                    nodes_explored: state.nodes,
                    enumerated: None,
                };
            }
        }
    }
    unreachable!("the full vertex set always percolates")
}

/// [`percolation_number`] followed by [`enumerate_minimum_sets`] at the found size.
pub fn solve_and_enumerate(g: &Graph, r: usize, opts: &SolveOptions) -> Result<SolveResult> {
    let mut result = percolation_number(g, r, opts);
    let m = result.m.ok_or(Error::BudgetExhausted {
        lower: result.lower_bound,
        upper: result.upper_bound,
    })?;
    let search = Search::new(g, r, false);
    let mut state = RunState::new(opts);
    state.nodes = result.nodes_explored;
    match search.search_size(m, Mode::All, &mut state) {
        SizeOutcome::Found(mut sets) => {
            sets.sort();
            result.enumerated = Some(sets);
            result.nodes_explored = state.nodes;
            Ok(result)
        }
        SizeOutcome::None => unreachable!("a witness of size m exists"),
        SizeOutcome::OutOfBudget => Err(Error::BudgetExhausted { lower: m, upper: m }),
    }
}

/// Every percolating set of size exactly `m(G, r)`, sorted lexicographically.
pub fn enumerate_minimum_sets(g: &Graph, r: usize, opts: &SolveOptions) -> Result<Vec<VertexSet>> {
    Ok(solve_and_enumerate(g, r, opts)?.enumerated.unwrap_or_default())
}

/// True iff no single-vertex deletion of `s` percolates. By monotonicity of
/// the closure this is equivalent to minimality under inclusion.
pub fn is_minimal_percolating(g: &Graph, s: &VertexSet, r: usize) -> Result<bool> {
    let mut p = Percolator::new(g);
    if !p.percolates(s.iter(), r) {
        return Err(Error::NotPercolating);
    }
    Ok(s.iter()
        .all(|v| !p.percolates(s.iter().filter(|&w| w != v), r)))
}

/// Removes vertices from `V(G)` in decreasing index order while the rest
/// still percolates.
fn greedy_minimal(g: &Graph, r: usize, nodes: &mut u64) -> VertexSet {
    let mut p = Percolator::new(g);
    let mut set = VertexSet::full(g.n());
    for v in (0..g.n()).rev() {
        set.remove(v);
        *nodes += 1;
        if !p.percolates(set.iter(), r) {
            set.insert(v);
        }
    }
    set
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    First,
    All,
}

enum SizeOutcome {
    Found(Vec<VertexSet>),
    None,
    OutOfBudget,
}

struct RunState {
    nodes: u64,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
    pool: Option<rayon::ThreadPool>,
    batch: usize,
}

impl RunState {
    fn new(opts: &SolveOptions) -> Self {
        let (pool, workers) = match opts.threads {
            Some(1) => (None, 1),
            Some(t) => (
                rayon::ThreadPoolBuilder::new().num_threads(t).build().ok(),
                t,
            ),
            None => (None, rayon::current_num_threads()),
        };
        RunState {
            nodes: 0,
            max_nodes: opts.budget.max_nodes,
            deadline: opts.budget.max_time.map(|d| Instant::now() + d),
            pool,
            batch: if workers <= 1 { 1 } else { workers * 4 },
        }
    }

    fn out_of_budget(&self) -> bool {
        self.max_nodes.is_some_and(|m| self.nodes >= m)
            || self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

struct TaskOutcome {
    nodes: u64,
    hits: Vec<VertexSet>,
    aborted: bool,
}

struct Search<'g> {
    g: &'g Graph,
    r: usize,
    forced: Vec<usize>,
    candidates: Vec<usize>,
    /// previous member of the vertex's twin class, when pruning
    twin_pred: Vec<Option<usize>>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, r: usize, twin_pruning: bool) -> Self {
        let forced_set = engine::forced_vertices(g, r);
        let mut twin_pred = vec![None; g.n()];
        if twin_pruning {
            for class in g.closed_twin_classes() {
                for w in class.windows(2) {
                    twin_pred[w[1]] = Some(w[0]);
                }
            }
        }
        Search {
            g,
            r,
            forced: forced_set.to_vec(),
            candidates: (0..g.n()).filter(|&v| !forced_set.contains(v)).collect(),
            twin_pred,
        }
    }

    fn allowed(&self, v: usize, in_set: &[bool]) -> bool {
        self.twin_pred[v].is_none_or(|p| in_set[p])
    }

    /// Prefixes (candidate positions) of length `min(pick, 2)` in lex order.
    fn tasks(&self, pick: usize) -> Vec<Vec<usize>> {
        let depth = pick.min(2);
        let c = self.candidates.len();
        let mut out = Vec::new();
        let mut in_set = vec![false; self.g.n()];
        let mut prefix = Vec::with_capacity(depth);
        self.collect_prefixes(0, depth, pick, c, &mut prefix, &mut in_set, &mut out);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn collect_prefixes(
        &self,
        from: usize,
        depth: usize,
        pick: usize,
        c: usize,
        prefix: &mut Vec<usize>,
        in_set: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        if prefix.len() == depth {
            out.push(prefix.clone());
            return;
        }
        let remaining = pick - prefix.len();
        for i in from..=c.saturating_sub(remaining) {
            if i >= c {
                break;
            }
            let v = self.candidates[i];
            if !self.allowed(v, in_set) {
                continue;
            }
            in_set[v] = true;
            prefix.push(i);
            self.collect_prefixes(i + 1, depth, pick, c, prefix, in_set, out);
            prefix.pop();
            in_set[v] = false;
        }
    }

    fn run_task(
        &self,
        prefix: &[usize],
        pick: usize,
        mode: Mode,
        max_nodes: Option<u64>,
        deadline: Option<Instant>,
        stop: &AtomicBool,
    ) -> TaskOutcome {
        let mut p = Percolator::new(self.g);
        let mut in_set = vec![false; self.g.n()];
        let mut chosen: Vec<usize> = Vec::with_capacity(pick);
        for &i in prefix {
            in_set[self.candidates[i]] = true;
            chosen.push(self.candidates[i]);
        }
        let mut out = TaskOutcome {
            nodes: 0,
            hits: Vec::new(),
            aborted: false,
        };
        let from = prefix.last().map_or(0, |&i| i + 1);
        let mut ctx = Dfs {
            p: &mut p,
            in_set: &mut in_set,
            chosen: &mut chosen,
            out: &mut out,
            pick,
            mode,
            max_nodes,
            deadline,
            stop,
        };
        self.dfs(from, &mut ctx);
        out
    }

    /// Returns false to stop the whole task.
    fn dfs(&self, from: usize, ctx: &mut Dfs<'_, '_>) -> bool {
        if ctx.chosen.len() == ctx.pick {
            ctx.out.nodes += 1;
            if ctx.out.nodes % 1024 == 0 {
                let late = ctx.deadline.is_some_and(|d| Instant::now() >= d);
                if late || ctx.stop.load(Ordering::Relaxed) {
                    ctx.out.aborted = true;
                    return false;
                }
            }
            if ctx.max_nodes.is_some_and(|m| ctx.out.nodes > m) {
                ctx.out.aborted = true;
                return false;
            }
            let seed = self.forced.iter().chain(ctx.chosen.iter()).copied();
            if ctx.p.percolates(seed, self.r) {
                let mut set = VertexSet::from_vertices(self.g.n(), self.forced.iter().copied());
                for &v in ctx.chosen.iter() {
                    set.insert(v);
                }
                ctx.out.hits.push(set);
                return ctx.mode == Mode::All;
            }
            return true;
        }
        let c = self.candidates.len();
        let remaining = ctx.pick - ctx.chosen.len();
        if c < remaining {
            return true;
        }
        for i in from..=(c - remaining) {
            let v = self.candidates[i];
            if !self.allowed(v, ctx.in_set) {
                continue;
            }
            ctx.in_set[v] = true;
            ctx.chosen.push(v);
            let go_on = self.dfs(i + 1, ctx);
            ctx.chosen.pop();
            ctx.in_set[v] = false;
            if !go_on {
                return false;
            }
        }
        true
    }

    fn search_size(&self, size: usize, mode: Mode, state: &mut RunState) -> SizeOutcome {
        if size < self.forced.len() || size - self.forced.len() > self.candidates.len() {
            return SizeOutcome::None;
        }
        let pick = size - self.forced.len();
        let tasks = self.tasks(pick);
        let stop = AtomicBool::new(false);
        let mut found = Vec::new();
        for batch in tasks.chunks(state.batch) {
            let run = |prefix: &Vec<usize>| {
                self.run_task(prefix, pick, mode, state.max_nodes, state.deadline, &stop)
            };
            let outcomes: Vec<TaskOutcome> = if batch.len() == 1 {
                batch.iter().map(run).collect()
            } else if let Some(pool) = &state.pool {
                pool.install(|| batch.par_iter().map(run).collect())
            } else {
                batch.par_iter().map(run).collect()
            };
            for outcome in outcomes {
                if state.out_of_budget() || outcome.aborted {
                    return SizeOutcome::OutOfBudget;
                }
                state.nodes += outcome.nodes;
                if !outcome.hits.is_empty() {
                    found.extend(outcome.hits);
                    if mode == Mode::First {
                        return SizeOutcome::Found(found);
                    }
                }
            }
        }
        if state.max_nodes.is_some_and(|m| state.nodes > m) {
            return SizeOutcome::OutOfBudget;
        }
        if found.is_empty() {
            SizeOutcome::None
        } else {
            SizeOutcome::Found(found)
        }
    }
}

struct Dfs<'a, 'g> {
    p: &'a mut Percolator<'g>,
    in_set: &'a mut [bool],
    chosen: &'a mut Vec<usize>,
    out: &'a mut TaskOutcome,
    pick: usize,
    mode: Mode,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
    stop: &'a AtomicBool,
}
