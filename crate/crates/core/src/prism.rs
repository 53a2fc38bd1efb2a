//! When is `m(G ⊠ K₂, 3) = 3`?
//!
//! The predicate: `m(G,2) = 2`, or `m(G,2) = 3` with a minimum
//! 2-percolating set spanning a `P₃` or forming the leaves of a `K₁,₃`.
//! [`prism_cross_check`] compares it with the exact solver on the prism.

use rayon::prelude::*;
use serde::Serialize;

use crate::product::{strong_product, ProductSpec};
use crate::solver::{self, Budget, SolveOptions};
use crate::{Error, Graph, Result, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shape {
    /// `m(G,2) = 2`.
    Pair,
    /// A minimum triple with at least two edges among its vertices.
    Path,
    /// A minimum triple whose vertices share an outside neighbor.
    Claw,
}

#[derive(Clone, Debug, Serialize)]
pub struct PrismVerdict {
    /// `None` when the solver ran out of budget.
    pub predicate: Option<bool>,
    pub m2: Option<usize>,
    pub witness: Option<VertexSet>,
    pub shape: Option<Shape>,
    pub reason: String,
}

fn opts(budget: Budget) -> SolveOptions {
    SolveOptions::sequential().with_budget(budget)
}

pub fn prism_characterization(g: &Graph, budget: Budget) -> Result<PrismVerdict> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let res = solver::percolation_number(g, 2, &opts(budget));
    let verdict = |predicate, witness, shape, reason: &str| PrismVerdict {
        predicate,
        m2: res.m,
        witness,
        shape,
        reason: reason.to_string(),
    };
    match res.m {
        None if res.lower_bound > 3 => Ok(verdict(Some(false), None, None, "m(G,2) > 3")),
        None => Ok(verdict(None, None, None, "solver budget exhausted")),
        Some(2) => Ok(verdict(Some(true), Some(res.witness.clone()), Some(Shape::Pair), "m(G,2) = 2")),
        Some(3) => {
            let sets = match solver::enumerate_minimum_sets(g, 2, &opts(budget)) {
                Ok(sets) => sets,
                Err(Error::BudgetExhausted { .. }) => {
                    return Ok(verdict(None, None, None, "solver budget exhausted"))
                }
                Err(e) => return Err(e),
            };
            for s in sets {
                if g.lies_in_p3_or_k13(&s)? {
                    let v = s.to_vec();
                    let edges = [(v[0], v[1]), (v[0], v[2]), (v[1], v[2])]
                        .iter()
                        .filter(|&&(a, b)| g.has_edge(a, b))
                        .count();
                    let shape = if edges >= 2 { Shape::Path } else { Shape::Claw };
                    return Ok(verdict(Some(true), Some(s), Some(shape), "m(G,2) = 3 with a P3 or K1,3 triple"));
                }
            }
            Ok(verdict(Some(false), None, None, "no minimum triple spans a P3 or the leaves of a K1,3"))
        }
        Some(_) => Ok(verdict(Some(false), None, None, "m(G,2) > 3")),
    }
}

/// At most one cut-vertex, and removing it leaves at most three components.
pub fn cut_vertex_condition(g: &Graph) -> bool {
    let cuts = g.cut_vertices();
    cuts.len() <= 1 && cuts.iter().all(|c| c.components <= 3)
}

#[derive(Clone, Debug, Serialize)]
pub struct PrismReport {
    pub graph: String,
    pub predicate: bool,
    pub m_prism_3: usize,
    pub agree: bool,
    pub cut_vertex_condition: bool,
    /// Some minimum percolating set of the prism lies in one `G`-layer.
    /// Only evaluated when `m_prism_3 = 3` and `|V(G)| ≥ 3`.
    pub single_layer_minimum: Option<bool>,
    pub verdict: PrismVerdict,
}

pub fn prism_cross_check(g: &Graph, budget: Budget) -> Result<PrismReport> {
    let verdict = prism_characterization(g, budget)?;
    let predicate = verdict.predicate.ok_or(Error::BudgetExhausted { lower: 0, upper: 3 })?;
    let prism = strong_product(&ProductSpec::new(vec![g.clone(), Graph::parse_named("K2")?])?)?;
    let res = solver::percolation_number(prism.graph(), 3, &opts(budget));
    let m = res.m.ok_or(Error::BudgetExhausted {
        lower: res.lower_bound,
        upper: res.upper_bound,
    })?;
    let single_layer_minimum = if m == 3 && g.n() >= 3 {
        let sets = solver::enumerate_minimum_sets(prism.graph(), 3, &opts(budget))?;
        // prism vertex (v, i) has flat index 2v + i
        Some(sets.iter().any(|s| {
            let layers: Vec<usize> = s.iter().map(|x| x % 2).collect();
            layers.iter().all(|&l| l == layers[0])
        }))
    } else {
        None
    };
    Ok(PrismReport {
        graph: g.to_string(),
        predicate,
        m_prism_3: m,
        agree: predicate == (m == 3),
        cut_vertex_condition: cut_vertex_condition(g),
        single_layer_minimum,
        verdict,
    })
}

/// Every labeled connected graph on `n` vertices, by edge subsets of `K_n`
/// in increasing bitmask order.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n), "enumeration is limited to 1..=7 vertices");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len())
        .into_par_iter()
        .filter_map(|mask| {
            let edges = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges).ok()?;
            g.is_connected().then_some(g)
        })
        .collect()
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SweepReport {
    pub max_n: usize,
    /// `(n, connected graphs checked)` for each order.
    pub graphs_per_order: Vec<(usize, usize)>,
    pub graphs_checked: usize,
    pub prism_number_three: usize,
    /// Edge lists of graphs where the predicate and the solver disagree.
    pub disagreements: Vec<String>,
    /// Prism number 3 but the cut-vertex condition fails.
    pub necessity_violations: Vec<String>,
    /// Prism number 3 but no minimum set inside a single layer.
    pub layer_violations: Vec<String>,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.disagreements.is_empty() && self.necessity_violations.is_empty() && self.layer_violations.is_empty()
    }
}

/// Cross-checks every connected graph on `2..=max_n` vertices. A single
/// vertex is not a valid factor, so `n = 1` is skipped.
pub fn prism_sweep(max_n: usize) -> Result<SweepReport> {
    let mut report = SweepReport {
        max_n,
        ..Default::default()
    };
    for n in 2..=max_n {
        let graphs = connected_graphs(n);
        let checks: Vec<PrismReport> = graphs
            .par_iter()
            .map(|g| prism_cross_check(g, Budget::unlimited()))
            .collect::<Result<_>>()?;
        report.graphs_per_order.push((n, graphs.len()));
        report.graphs_checked += graphs.len();
        for (g, c) in graphs.iter().zip(&checks) {
            let label = || g.to_edge_list().trim_end().replace('\n', "; ");
            if c.m_prism_3 == 3 {
                report.prism_number_three += 1;
                if !c.cut_vertex_condition {
                    report.necessity_violations.push(label());
                }
                if c.single_layer_minimum == Some(false) {
                    report.layer_violations.push(label());
                }
            }
            if !c.agree {
                report.disagreements.push(label());
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::pendant_square;

    fn named(s: &str) -> Graph {
        Graph::parse_named(s).unwrap()
    }

    #[test]
    fn named_verdicts() {
        let claw = prism_characterization(&named("S3"), Budget::unlimited()).unwrap();
        assert_eq!((claw.predicate, claw.shape), (Some(true), Some(Shape::Claw)));
        assert_eq!(prism_characterization(&named("C5"), Budget::unlimited()).unwrap().predicate, Some(false));
        let gp = prism_characterization(&pendant_square(), Budget::unlimited()).unwrap();
        assert_eq!((gp.predicate, gp.m2), (Some(false), Some(3)));
        assert_eq!(prism_characterization(&named("C4"), Budget::unlimited()).unwrap().shape, Some(Shape::Pair));
    }

    #[test]
    fn cut_vertex_examples() {
        assert!(!cut_vertex_condition(&named("P4")));
        assert!(cut_vertex_condition(&named("S3")));
        assert!(!cut_vertex_condition(&named("S4")));
        assert!(cut_vertex_condition(&pendant_square()));
        assert!(cut_vertex_condition(&named("C5")));
    }

    #[test]
    fn cross_checks() {
        let claw = prism_cross_check(&named("S3"), Budget::unlimited()).unwrap();
        assert!(claw.agree && claw.predicate && claw.m_prism_3 == 3);
        assert_eq!(claw.single_layer_minimum, Some(true));
        let c5 = prism_cross_check(&named("C5"), Budget::unlimited()).unwrap();
        assert!(c5.agree && !c5.predicate);
        assert_eq!(c5.m_prism_3, 4);
        let gp = prism_cross_check(&pendant_square(), Budget::unlimited()).unwrap();
        assert!(gp.agree && gp.m_prism_3 > 3 && gp.cut_vertex_condition);
    }

    #[test]
    fn connected_graph_counts() {
        // labeled connected graphs: 1, 1, 4, 38, 728
        let counts: Vec<usize> = (1..=5).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
    }

    #[test]
    fn sweep_up_to_five() {
        let report = prism_sweep(5).unwrap();
        assert_eq!(report.graphs_checked, 1 + 4 + 38 + 728);
        assert!(report.is_clean(), "{report:?}");
    }
}
