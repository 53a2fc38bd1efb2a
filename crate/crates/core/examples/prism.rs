//! Check the prism predicate on a few graphs, then sweep all small graphs.

use strongperc::graph::pendant_square;
use strongperc::prism::{self, prism_cross_check};
use strongperc::solver::Budget;
use strongperc::Graph;

fn main() -> strongperc::Result<()> {
    let mut graphs: Vec<(String, Graph)> = ["S3", "C4", "C5", "P4", "K4"]
        .into_iter()
        .map(|s| Ok((s.to_string(), Graph::parse_named(s)?)))
        .collect::<strongperc::Result<_>>()?;
    graphs.push(("G'".into(), pendant_square()));

    for (label, g) in &graphs {
        let c = prism_cross_check(g, Budget::unlimited())?;
        println!(
            "{label:<4} predicate = {:<5} m(G⊠K2,3) = {}  cut-vertex condition = {}  shape = {:?}",
            c.predicate, c.m_prism_3, c.cut_vertex_condition, c.verdict.shape
        );
    }

    let sweep = prism::prism_sweep(5)?;
    println!(
        "sweep up to 5 vertices: {} graphs, {} with prism number 3, clean = {}",
        sweep.graphs_checked,
        sweep.prism_number_three,
        sweep.is_clean()
    );
    Ok(())
}
