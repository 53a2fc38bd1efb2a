//! Exact percolation numbers with the branch-and-bound solver.

use strongperc::graph::pendant_square;
use strongperc::product::{parse_expression, strong_product};
use strongperc::solver::{self, SolveOptions};
use strongperc::Graph;

fn report(label: &str, g: &Graph, r: usize) {
    let res = solver::percolation_number(g, r, &SolveOptions::default());
    match res.m {
        Some(m) => println!("m({label}, {r}) = {m}  witness {:?}  ({} nodes)", res.witness.to_vec(), res.nodes_explored),
        None => println!("m({label}, {r}) in [{}, {}]", res.lower_bound, res.upper_bound),
    }
}

fn main() -> strongperc::Result<()> {
    for expr in ["P3 x P3", "C5 x K2", "C6 x K2 x K2", "C5 x C5"] {
        let prod = strong_product(&parse_expression(expr, None)?)?;
        for r in [2, 3, 4, 5] {
            report(expr, prod.graph(), r);
        }
    }

    let gp = pendant_square();
    report("G'", &gp, 2);
    let all = solver::solve_and_enumerate(&gp, 2, &SolveOptions::default())?;
    println!("minimum 2-percolating sets of G': {:?}", all.enumerated.unwrap_or_default());
    Ok(())
}
