//! Box growth on the infinite grid with king moves.

use strongperc::grid::{self, GridVerdict};

fn main() -> strongperc::Result<()> {
    for (dim, r) in [(2, 3), (2, 4), (3, 7), (3, 9)] {
        for side in 1..=5 {
            let v = grid::box_expansion_test(dim, r, side, 3)?;
            let tag = match &v {
                GridVerdict::PercolatesByBoxInduction { .. } => "grows",
                GridVerdict::StalledInterior { .. } => "stalls",
                GridVerdict::Inconclusive { .. } => "?",
            };
            println!("n = {dim}, r = {r}, side {side}: {tag}");
            if v.percolates() {
                break;
            }
        }
    }

    let report = grid::fpt_probe(2, 5, 3)?;
    println!(
        "n = 2: formula bounds [{}, {}], largest threshold with a growing box: {:?}",
        report.lower, report.upper, report.certified_lower
    );
    Ok(())
}
