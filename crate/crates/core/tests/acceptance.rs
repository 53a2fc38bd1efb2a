//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test --test acceptance`. Exits non-zero if any criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use strongperc::engine::{self, Percolator};
use strongperc::graph::pendant_square;
use strongperc::grid;
use strongperc::prism::{self, connected_graphs};
use strongperc::product::{parse_expression, strong_product, ProductSpec, StrongProduct};
use strongperc::seeds::{self, SeedCertificate};
use strongperc::solver::{self, Budget, SolveOptions};
use strongperc::{cli, Graph, VertexSet};

// Time limits per criterion.
const LIMIT_1: Duration = Duration::from_secs(1);
const LIMIT_2: Duration = Duration::from_secs(30);
const LIMIT_3: Duration = Duration::from_secs(5 * 60);
const LIMIT_4: Duration = Duration::from_secs(2 * 60);
const LIMIT_5: Duration = Duration::from_secs(5 * 60);
const LIMIT_6: Duration = Duration::from_secs(10);
const LIMIT_7: Duration = Duration::from_secs(10 * 60);
const LIMIT_8_9: Duration = Duration::from_secs(30 * 60);
const LIMIT_10: Duration = Duration::from_secs(1);
const LIMIT_11: Duration = Duration::from_secs(60);
const LIMIT_12: Duration = Duration::from_secs(10);
const LIMIT_13: Duration = Duration::from_secs(10 * 60);

/// Node budget for the lower-bound family; about a minute of search.
const BUDGET_7: u64 = 200_000_000;
/// Node budget for solver cross-validation of generated seeds.
const BUDGET_CROSS: u64 = 2_000_000;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn product(expr: &str) -> StrongProduct {
    strong_product(&parse_expression(expr, None).unwrap()).unwrap()
}

fn named(s: &str) -> Graph {
    Graph::parse_named(s).unwrap()
}

fn exact_m(g: &Graph, r: usize) -> Result<usize, String> {
    let res = solver::percolation_number(g, r, &SolveOptions::default());
    ensure(engine::percolates(g, &res.witness, r), || format!("witness of {g} fails to percolate"))?;
    res.m.ok_or_else(|| format!("solver did not finish on {g}"))
}

fn c1() -> Check {
    let g = product("P3 x P3").graph().clone();
    let (m4, m5) = (exact_m(&g, 4)?, exact_m(&g, 5)?);
    ensure(m4 == 5 && m5 == 6, || format!("got m4 = {m4}, m5 = {m5}"))?;
    Ok("m(P3⊠P3,4) = 5, m(P3⊠P3,5) = 6".into())
}

fn c2() -> Check {
    for n in 3..=10usize {
        let m = exact_m(product(&format!("C{n} x K2")).graph(), 3)?;
        ensure(m == n.div_ceil(2) + 1, || format!("C{n}⊠K2: got {m}"))?;
    }
    Ok("n = 3..10".into())
}

fn c3() -> Check {
    for n in 3..=6usize {
        let m = exact_m(product(&format!("C{n} x K2 x K2")).graph(), 5)?;
        ensure(m == 3 + n.div_ceil(2), || format!("C{n}⊠K4: got {m}"))?;
    }
    Ok("n = 3..6 (K4 as K2⊠K2)".into())
}

fn c4() -> Check {
    let family = ["P3", "P4", "C3", "C4", "C5", "S3"];
    let mut pairs = 0;
    for a in family {
        for b in family {
            let g = product(&format!("{a} x {b}")).graph().clone();
            for r in [2, 3] {
                let m = exact_m(&g, r)?;
                ensure(m == r, || format!("m({a}⊠{b},{r}) = {m}"))?;
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} ordered pairs, r ∈ {{2,3}}"))
}

struct SeedTally {
    certificates: usize,
    cross_checked: usize,
}

impl SeedTally {
    /// Verifies the certificate independently and compares with the exact solver when cheap.
    fn record(&mut self, spec: &ProductSpec, cert: SeedCertificate, expect_size: usize, optimal: bool) -> Result<(), String> {
        let prod = strong_product(spec).map_err(|e| e.to_string())?;
        ensure(cert.verified && cert.seed.len() == expect_size, || {
            format!("{:?} on {}: size {} expected {expect_size}", cert.construction, cert.product, cert.seed.len())
        })?;
        ensure(naive_percolates(prod.graph(), &cert.seed, cert.r), || {
            format!("{:?} on {} fails the naive oracle", cert.construction, cert.product)
        })?;
        if prod.graph().n() <= 40 {
            let opts = SolveOptions::default().with_budget(Budget::nodes(BUDGET_CROSS));
            let res = solver::percolation_number(prod.graph(), cert.r, &opts);
            if let Some(m) = res.m {
                ensure(cert.seed.len() >= m, || format!("{} below m = {m}", cert.product))?;
                if optimal {
                    ensure(cert.seed.len() == m, || {
                        format!("{:?} on {}: size {} but m = {m}", cert.construction, cert.product, cert.seed.len())
                    })?;
                }
                self.cross_checked += 1;
            }
        }
        self.certificates += 1;
        Ok(())
    }
}

fn c5() -> Check {
    let mut t = SeedTally {
        certificates: 0,
        cross_checked: 0,
    };
    let err = |e: strongperc::Error| e.to_string();
    let corner = ["P3 x P3", "P4 x C5", "K2 x K2", "S3 x C4", "P3 x K2 x K2", "P4 x C5 x K2", "C4 x S3 x P3"];
    for expr in corner {
        let spec = parse_expression(expr, None).unwrap();
        for r in 1..=1usize << (spec.k() - 1) {
            t.record(&spec, seeds::seed_corner(&spec, r).map_err(err)?, r, true)?;
        }
    }
    for expr in ["P3 x P3", "C4 x P4", "S3 x C5", "P3 x P3 x K2", "K2 x C4 x P3", "P3 x C4 x C5"] {
        let spec = parse_expression(expr, None).unwrap();
        let top = 3 * (1usize << (spec.k() - 2));
        for r in 1..=top {
            t.record(&spec, seeds::seed_two_big(&spec, r).map_err(err)?, r, true)?;
        }
    }
    for expr in ["P3 x P3 x P3", "P3 x P3 x C5", "S3 x C4 x P4", "P3 x P3 x P3 x K2", "K2 x C3 x P3 x C4"] {
        let spec = parse_expression(expr, None).unwrap();
        let size = 7 * (1usize << (spec.k() - 3));
        t.record(&spec, seeds::seed_three_big(&spec).map_err(err)?, size, false)?;
    }
    for expr in ["P3 x P3 x P3 x P3", "C3 x C3 x C3 x C3", "P3 x C4 x S3 x P4"] {
        let spec = parse_expression(expr, None).unwrap();
        t.record(&spec, seeds::seed_all_big(&spec).map_err(err)?, 23, false)?;
    }
    for k in [2, 3] {
        for n in 3..=8usize {
            let size = (1 << (k - 1)) - 1 + n.div_ceil(2);
            let spec = parse_expression(&format!("C{n}{}", " x K2".repeat(k - 1)), None).unwrap();
            t.record(&spec, seeds::seed_cycle_clique(n, k).map_err(err)?, size, true)?;
        }
    }
    // factors with a 2-percolating pair: connected graphs on 2..=4 vertices
    let factors: Vec<Graph> = (2..=4)
        .flat_map(connected_graphs)
        .filter(|g| !seeds::percolating_pairs(g).is_empty())
        .collect();
    let mut two_factor = 0;
    for g in &factors {
        for h in &factors {
            let spec = ProductSpec::new(vec![g.clone(), h.clone()]).unwrap();
            let c4 = seeds::seed_two_factor_r4(g, h).map_err(err)?;
            let size = c4.seed.len();
            ensure(size == 4 || size == 5, || format!("r4 seed of size {size}"))?;
            t.record(&spec, c4, size, false)?;
            if g.n() >= 3 && h.n() >= 3 {
                let c5 = seeds::seed_two_factor_r5(g, h).map_err(err)?;
                let size = c5.seed.len();
                ensure(size == 5 || size == 6, || format!("r5 seed of size {size}"))?;
                t.record(&spec, c5, size, false)?;
            }
            two_factor += 1;
        }
    }
    Ok(format!(
        "{} certificates verified ({} factor pairs for r4/r5), {} cross-checked against the solver",
        t.certificates, two_factor, t.cross_checked
    ))
}

fn c6() -> Check {
    let prod = product("P3 x P3 x P3 x P3");
    let cert = seeds::seed_all_big(prod.spec()).map_err(|e| e.to_string())?;
    ensure(cert.seed.len() == 23 && cert.r == 15, || format!("size {} at r = {}", cert.seed.len(), cert.r))?;
    ensure(naive_percolates(prod.graph(), &cert.seed, 15), || "naive oracle disagrees".into())?;
    Ok("23 vertices percolate P3^⊠4 at r = 15".into())
}

fn c7() -> Check {
    let mut notes = Vec::new();
    for n in 3..=5usize {
        let g = product(&format!("C{n} x C{n}")).graph().clone();
        let opts = SolveOptions::default().with_budget(Budget::nodes(BUDGET_7));
        let res = solver::percolation_number(&g, 4, &opts);
        let bound = n.div_ceil(2);
        match res.m {
            Some(m) => {
                ensure(m >= bound, || format!("m(C{n}⊠C{n},4) = {m} < {bound}"))?;
                notes.push(format!("C{n}: m = {m}"));
            }
            None => {
                ensure(res.lower_bound >= bound, || format!("C{n}: budget exhausted below {bound}"))?;
                notes.push(format!("C{n}: m ∈ [{}, {}]", res.lower_bound, res.upper_bound));
            }
        }
    }
    Ok(notes.join(", "))
}

fn c8_c9() -> (Check, Check) {
    let named_cases = || -> Result<(), String> {
        let b = Budget::unlimited();
        let claw = prism::prism_cross_check(&named("S3"), b).map_err(|e| e.to_string())?;
        ensure(claw.predicate && claw.m_prism_3 == 3, || "K1,3 should satisfy the predicate".into())?;
        let c5 = prism::prism_cross_check(&named("C5"), b).map_err(|e| e.to_string())?;
        ensure(!c5.predicate && c5.m_prism_3 > 3, || "C5 should fail".into())?;
        let gp = pendant_square();
        let report = prism::prism_cross_check(&gp, b).map_err(|e| e.to_string())?;
        ensure(!report.predicate && report.m_prism_3 > 3, || "G' should fail".into())?;
        let sets = solver::enumerate_minimum_sets(&gp, 2, &SolveOptions::default()).map_err(|e| e.to_string())?;
        ensure(sets.len() == 1 && sets[0].len() == 3, || format!("G' minimum sets: {sets:?}"))?;
        Ok(())
    };
    if let Err(e) = named_cases() {
        return (Err(e), Err("named cases failed".into()));
    }
    let report = match prism::prism_sweep(6) {
        Ok(r) => r,
        Err(e) => return (Err(e.to_string()), Err(e.to_string())),
    };
    let equivalence = if report.disagreements.is_empty() && report.layer_violations.is_empty() {
        Ok(format!(
            "{} connected graphs on 2..=6 vertices, {} with prism number 3; named cases K1,3, C5, G' hold",
            report.graphs_checked, report.prism_number_three
        ))
    } else {
        Err(format!(
            "disagreements: {:?}; layer violations: {:?}",
            report.disagreements, report.layer_violations
        ))
    };
    let necessity = if report.necessity_violations.is_empty() {
        Ok(format!("0 counterexamples over {} graphs", report.graphs_checked))
    } else {
        Err(format!("counterexamples: {:?}", report.necessity_violations))
    };
    (equivalence, necessity)
}

fn c10() -> Check {
    let prod = product("S2 x S2");
    let res = solver::percolation_number(prod.graph(), 4, &SolveOptions::default());
    let m = res.m.ok_or("solver did not finish")?;
    let degree3: Vec<usize> = (0..prod.graph().n()).filter(|&v| prod.graph().degree(v) == 3).collect();
    ensure(degree3.len() == 4 && res.forced.to_vec() == degree3, || format!("forced {:?}", res.forced))?;
    ensure(m >= 4 && res.forced.is_subset(&res.witness), || format!("m = {m}"))?;
    Ok(format!("m(K1,2⊠K1,2,4) = {m}, forced = {:?}", res.forced))
}

fn c11() -> Check {
    let err = |e: strongperc::Error| e.to_string();
    ensure(grid::box_expansion_test(3, 9, 5, 3).map_err(err)?.percolates(), || "[5]^3 at r = 9".into())?;
    for m in 1..=8 {
        let w = grid::box_seed(2, m, 3).map_err(err)?;
        ensure(grid::stall_certificate(&w, 4).map_err(err)?, || format!("no stall for side {m} at n=2, r=4"))?;
    }
    for m in 1..=6 {
        let w = grid::box_seed(3, m, 3).map_err(err)?;
        ensure(grid::stall_certificate(&w, 10).map_err(err)?, || format!("no stall for side {m} at n=3, r=10"))?;
    }
    let side = (1..=8)
        .find(|&m| grid::box_expansion_test(2, 3, m, 3).is_ok_and(|v| v.percolates()))
        .ok_or("no box up to side 8 percolates Z^2 at r = 3")?;
    // independent recheck of the induction step with a naive lattice closure
    ensure(naive_box_grows(3, 9, 5), || "naive lattice closure disagrees for [5]^3".into())?;
    ensure(naive_box_grows(2, 3, side), || "naive lattice closure disagrees in Z^2".into())?;
    Ok(format!("[5]^3 grows at r = 9; stalls at (2,4,≤8) and (3,10,≤6); smallest square for r = 3 has side {side}"))
}

fn c12() -> Check {
    let prod = product("P3 x P3 x P3");
    let cert = seeds::seed_three_big(prod.spec()).map_err(|e| e.to_string())?;
    let c = prod.codec();
    // table entries (i, j, l) are 1-indexed
    let enc = |pts: &[[usize; 3]]| -> Vec<usize> {
        let mut v: Vec<usize> = pts.iter().map(|p| c.encode(&[p[0] - 1, p[1] - 1, p[2] - 1])).collect();
        v.sort_unstable();
        v
    };
    let mut expected_seed = Vec::new();
    for i in 1..=3 {
        for j in 1..=3 {
            if !(j == 2 && (i == 1 || i == 2)) {
                expected_seed.push([i, j, 1]);
            }
        }
    }
    ensure(cert.seed.to_vec() == enc(&expected_seed), || format!("seed {:?}", cert.coordinates))?;
    let table: [&[[usize; 3]]; 5] = [
        &[[2, 2, 1], [2, 2, 2]],
        &[[3, 2, 2]],
        &[[2, 1, 2], [2, 3, 2]],
        &[[1, 2, 1], [1, 2, 2], [3, 1, 2], [3, 3, 2]],
        &[[1, 1, 2], [1, 3, 2]],
    ];
    let run = engine::percolate(prod.graph(), &cert.seed, 7);
    for (step, entry) in table.iter().enumerate() {
        let t = step as u32 + 1;
        let got: Vec<usize> = run.infected_at(t).into_iter().filter(|&v| c.decode(v)[2] <= 1).collect();
        ensure(got == enc(entry), || {
            let pts: Vec<_> = got.iter().map(|&v| c.decode(v)).collect();
            format!("step {t}: engine infected {pts:?}")
        })?;
    }
    let layers = c.cuboid(&[vec![0, 1, 2], vec![0, 1, 2], vec![0, 1]]).unwrap();
    ensure(layers.iter().all(|v| run.infection_time[v].is_some_and(|t| t <= 5)), || {
        "two bottom layers not infected by step 5".into()
    })?;
    ensure(run.percolated, || "three-big seed does not percolate".into())?;
    Ok("steps 1-5 match on the two bottom layers; round 1 = {(2,2,1),(2,2,2)}".into())
}

fn c13() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    // engine monotonicity, both directions, against the naive closure
    for _ in 0..500 {
        let n = rng.gen_range(2..=64);
        let g = random_graph(&mut rng, n);
        let small = random_set(&mut rng, n);
        let mut large = small.clone();
        large.union_with(&random_set(&mut rng, n));
        let r = rng.gen_range(1..=5);
        let (a, b) = (engine::closure(&g, &small, r), engine::closure(&g, &large, r));
        ensure(a.is_subset(&b), || "closure not monotone in the seed".into())?;
        ensure(engine::closure(&g, &small, r + 1).is_subset(&a), || "closure not monotone in r".into())?;
        ensure(a == naive_closure(&g, &small, r), || "closure differs from the naive recurrence".into())?;
    }
    // twin exchange on every connected graph with at most 6 vertices
    let mut exchanges = 0u64;
    for n in 2..=6 {
        for g in connected_graphs(n) {
            let mut p = Percolator::new(&g);
            for class in g.closed_twin_classes().into_iter().filter(|c| c.len() > 1) {
                let (u, v) = (class[0], class[1]);
                for mask in 0u32..1 << n {
                    if mask >> u & 1 == 1 && mask >> v & 1 == 0 {
                        let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                        let t: Vec<usize> = s.iter().map(|&x| if x == u { v } else { x }).collect();
                        for r in [2, 3] {
                            ensure(p.percolates(s.iter().copied(), r) == p.percolates(t.iter().copied(), r), || {
                                format!("twin exchange fails on {}", g.to_edge_list())
                            })?;
                        }
                        exchanges += 1;
                    }
                }
            }
        }
    }
    // solver against exhaustive subsets
    let mut solved = 0;
    for n in 1..=5 {
        for g in connected_graphs(n) {
            for r in [2, 3] {
                let res = solver::percolation_number(&g, r, &SolveOptions::sequential());
                let (m, witness) = naive_minimum(&g, r);
                ensure(res.m == Some(m) && res.witness == witness, || {
                    format!("solver {:?}/{:?} vs oracle {m}/{witness:?} on {}", res.m, res.witness, g.to_edge_list())
                })?;
                solved += 1;
            }
        }
    }
    // CLI output does not depend on the thread count
    let commands: &[&[&str]] = &[
        &["number", "--r", "4", "C5 x C5"],
        &["number", "--r", "3", "--enumerate", "C5 x K2"],
        &["number", "--r", "5", "--budget-nodes", "5000", "C4 x C4"],
        &["seed", "--construction", "r5", "P3 x P3"],
        &["prism-sweep", "--max-n", "4"],
        &["grid", "fpt", "--n", "2"],
    ];
    for cmd in commands {
        let one = run_cli(cmd, "1");
        let eight = run_cli(cmd, "8");
        ensure(one == eight, || format!("output differs between 1 and 8 threads for {cmd:?}"))?;
    }
    Ok(format!(
        "500 random monotonicity cases, {exchanges} twin exchanges, {solved} solver/oracle comparisons, {} CLI commands deterministic",
        commands.len()
    ))
}

fn run_cli(cmd: &[&str], threads: &str) -> (i32, String) {
    let mut argv = vec!["strongperc", "--threads", threads];
    argv.extend_from_slice(cmd);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

// ---- independent oracles ----

fn naive_closure(g: &Graph, seed: &VertexSet, r: usize) -> VertexSet {
    let mut infected: Vec<bool> = (0..g.n()).map(|v| seed.contains(v)).collect();
    loop {
        let new: Vec<usize> = (0..g.n())
            .filter(|&v| !infected[v])
            .filter(|&v| (0..g.n()).filter(|&w| infected[w] && g.has_edge(v, w)).count() >= r)
            .collect();
        if new.is_empty() {
            break;
        }
        for v in new {
            infected[v] = true;
        }
    }
    VertexSet::from_vertices(g.n(), (0..g.n()).filter(|&v| infected[v]))
}

fn naive_percolates(g: &Graph, seed: &VertexSet, r: usize) -> bool {
    naive_closure(g, seed, r).is_full()
}

/// Smallest size and lexicographically least percolating set, by trying every subset.
fn naive_minimum(g: &Graph, r: usize) -> (usize, VertexSet) {
    let n = g.n();
    let mut best: Option<VertexSet> = None;
    for mask in 0u32..1 << n {
        let s = VertexSet::from_vertices(n, (0..n).filter(|&i| mask >> i & 1 == 1));
        if !naive_percolates(g, &s, r) {
            continue;
        }
        best = match best {
            Some(b) if (b.len(), &b) <= (s.len(), &s) => Some(b),
            _ => Some(s),
        };
    }
    let b = best.expect("the full set percolates");
    (b.len(), b)
}

/// Closure of `[1,m]^n` on an explicit lattice box, checked for `[0,m+1]^n`.
fn naive_box_grows(n: usize, r: usize, m: usize) -> bool {
    let (lo, hi) = (-2i64, m as i64 + 3);
    let side = (hi - lo + 1) as usize;
    let cells = side.pow(n as u32);
    let coord = |mut i: usize| -> Vec<i64> {
        let mut p = vec![0; n];
        for a in (0..n).rev() {
            p[a] = lo + (i % side) as i64;
            i /= side;
        }
        p
    };
    let mut inf: Vec<bool> = (0..cells).map(|i| coord(i).iter().all(|&x| 1 <= x && x <= m as i64)).collect();
    loop {
        let pts: Vec<Vec<i64>> = (0..cells).map(coord).collect();
        let new: Vec<usize> = (0..cells)
            .filter(|&i| !inf[i])
            .filter(|&i| {
                let p = &pts[i];
                (0..cells)
                    .filter(|&j| inf[j] && j != i && pts[j].iter().zip(p).all(|(a, b)| (a - b).abs() <= 1))
                    .count()
                    >= r
            })
            .collect();
        if new.is_empty() {
            break;
        }
        for i in new {
            inf[i] = true;
        }
    }
    (0..cells).all(|i| !coord(i).iter().all(|&x| 0 <= x && x <= m as i64 + 1) || inf[i])
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p = rng.gen_range(0.1..0.6);
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

fn random_set(rng: &mut ChaCha8Rng, n: usize) -> VertexSet {
    let p = rng.gen_range(0.05..0.5);
    VertexSet::from_vertices(n, (0..n).filter(|_| rng.gen_bool(p)))
}

// ---- harness ----

fn report(id: &str, name: &str, limit: Duration, elapsed: Duration, outcome: Check) -> bool {
    let in_time = elapsed <= limit;
    let pass = outcome.is_ok() && in_time;
    let detail = match &outcome {
        Ok(d) if in_time => d.clone(),
        Ok(d) => format!("{d}; over the {:.0?} limit", limit),
        Err(e) => e.clone(),
    };
    println!(
        "{} [{id}] {name} ({:.2?}): {detail}",
        if pass { "PASS" } else { "FAIL" },
        elapsed
    );
    pass
}

fn timed<T>(f: impl FnOnce() -> T) -> (Result<T, String>, Duration) {
    let start = Instant::now();
    let out = panic::catch_unwind(AssertUnwindSafe(f)).map_err(|p| {
        p.downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into())
    });
    (out, start.elapsed())
}

fn main() {
    let criteria: Vec<(&str, &str, Duration, fn() -> Check)> = vec![
        ("1", "m(P3⊠P3, 4) and m(P3⊠P3, 5)", LIMIT_1, c1),
        ("2", "m(Cn⊠K2, 3) = ⌈n/2⌉ + 1", LIMIT_2, c2),
        ("3", "m(Cn⊠K4, 5) = 3 + ⌈n/2⌉", LIMIT_3, c3),
        ("4", "m(G⊠H, 2) = 2 and m(G⊠H, 3) = 3", LIMIT_4, c4),
        ("5", "constructive seeds verify", LIMIT_5, c5),
        ("6", "all-big seed on P3^⊠4", LIMIT_6, c6),
        ("7", "m(Cn⊠Cn, 4) ≥ ⌈n/2⌉", LIMIT_7, c7),
    ];
    let mut all = true;
    for (id, name, limit, f) in criteria {
        let (out, elapsed) = timed(f);
        all &= report(id, name, limit, elapsed, out.and_then(|x| x));
    }
    let (out, elapsed) = timed(c8_c9);
    let (eq, nec) = out.unwrap_or_else(|e| (Err(e.clone()), Err(e)));
    all &= report("8", "prism characterization equivalence", LIMIT_8_9, elapsed, eq);
    all &= report("9", "cut-vertex necessity", LIMIT_8_9, elapsed, nec);
    let rest: Vec<(&str, &str, Duration, fn() -> Check)> = vec![
        ("10", "forced vertices of K1,2⊠K1,2", LIMIT_10, c10),
        ("11", "grid certificates", LIMIT_11, c11),
        ("12", "infection-step table", LIMIT_12, c12),
        ("13", "property suites and thread determinism", LIMIT_13, c13),
    ];
    for (id, name, limit, f) in rest {
        let (out, elapsed) = timed(f);
        all &= report(id, name, limit, elapsed, out.and_then(|x| x));
    }
    if !all {
        std::process::exit(1);
    }
}
