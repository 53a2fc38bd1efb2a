//! Run the r-neighbor process on a strong product and print each round.
//!
//! ```text
//! cargo run --example percolate
//! ```

use strongperc::engine;
use strongperc::product::{parse_expression, strong_product};
use strongperc::VertexSet;

fn main() -> strongperc::Result<()> {
    let prod = strong_product(&parse_expression("P3 x P3", None)?)?;
    let codec = prod.codec();

    // a full top row plus the two bottom corners, then plus the whole bottom row
    let seeds = [
        (4, vec![vec![0, 0], vec![0, 1], vec![0, 2], vec![2, 0], vec![2, 2]]),
        (5, vec![vec![0, 0], vec![0, 1], vec![0, 2], vec![2, 0], vec![2, 1], vec![2, 2]]),
    ];

    for (r, tuples) in seeds {
        let seed = VertexSet::from_vertices(codec.size(), codec.encode_all(&tuples));
        let run = engine::percolate(prod.graph(), &seed, r);
        println!("r = {r}: percolated = {}, rounds = {}", run.percolated, run.rounds);
        for t in 1..=run.rounds {
            let cells: Vec<Vec<usize>> = run.infected_at(t).into_iter().map(|v| codec.decode(v)).collect();
            println!("  t = {t}: {cells:?}");
        }
        // dropping any one seed vertex stalls the process
        let tight = seed.iter().all(|v| {
            let mut s = seed.clone();
            s.remove(v);
            !engine::percolates(prod.graph(), &s, r)
        });
        println!("  minimal: {tight}");
    }
    Ok(())
}
