//! r-neighbor bootstrap percolation on finite graphs, strong products of
//! graphs and finite windows of the strong grid ℤⁿ.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: immutable simple graphs, named families, structural queries.
//! - [`product`]: strong products `G₁ ⊠ … ⊠ G_k` with a row-major coordinate codec.
//! - [`engine`]: the synchronous r-neighbor process with per-vertex infection times.
//! - [`solver`]: exact percolation numbers `m(G, r)` by pruned exhaustive search.
//! - [`seeds`]: explicit percolating sets for strong products, each verified by the engine.
//! - [`prism`]: the `m(G ⊠ K₂, 3) = 3` characterization and its brute-force cross-check.
//! - [`grid`]: percolation and stalling certificates on windows of ℤⁿ.
//! - [`cli`]: the command-line front end used by the `strongperc` binary.
//!
//! ```
//! use strongperc::{engine, graph::Graph, product};
//!
//! let p3 = Graph::parse_named("P3").unwrap();
//! let prod = product::strong_product(&product::ProductSpec::new(vec![p3.clone(), p3]).unwrap()).unwrap();
//! let corners = prod.codec().encode_all(&[vec![0, 0], vec![0, 2], vec![2, 0], vec![2, 2]]);
//! let seed = strongperc::VertexSet::from_vertices(prod.graph().n(), corners);
//! let run = engine::percolate(prod.graph(), &seed, 4);
//! assert!(!run.percolated);
//! ```

pub mod cli;
pub mod engine;
pub mod error;
pub mod graph;
pub mod grid;
pub mod prism;
pub mod product;
pub mod seeds;
pub mod solver;
mod vertex_set;

pub use error::{Error, Result};
pub use graph::{BfsLayout, Graph};
pub use vertex_set::VertexSet;
