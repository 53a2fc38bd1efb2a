//! The r-neighbor bootstrap percolation process.
//!
//! Starting from `A₀`, round `t` infects every uninfected vertex with at
//! least `r` neighbors in `A_{t−1}`. Infected vertices stay infected.

use serde::Serialize;

use crate::{Graph, VertexSet};

/// Result of a synchronous simulation.
#[derive(Clone, Debug, Serialize)]
pub struct PercolationRun {
    pub r: usize,
    pub seed: VertexSet,
    /// Round in which each vertex became infected; `None` if never.
    pub infection_time: Vec<Option<u32>>,
    /// Number of rounds that infected at least one vertex.
    pub rounds: u32,
    /// `round_counts[t]` vertices were infected at time `t` (index 0 is the seed).
    pub round_counts: Vec<usize>,
    pub percolated: bool,
}

impl PercolationRun {
    pub fn infected(&self) -> VertexSet {
        VertexSet::from_vertices(
            self.infection_time.len(),
            self.infection_time
                .iter()
                .enumerate()
                .filter_map(|(v, t)| t.map(|_| v)),
        )
    }

    /// Vertices infected exactly at time `t`, increasing.
    pub fn infected_at(&self, t: u32) -> Vec<usize> {
        self.infection_time
            .iter()
            .enumerate()
            .filter_map(|(v, &x)| (x == Some(t)).then_some(v))
            .collect()
    }
}

/// Runs the synchronous process to its fixpoint.
///
/// Each round only revisits neighbors of the vertices infected in the
/// previous round, so total work is linear in the edges touched.
pub fn percolate(g: &Graph, seed: &VertexSet, r: usize) -> PercolationRun {
    assert!(r >= 1, "threshold must be at least 1");
    assert_eq!(seed.universe(), g.n(), "seed universe does not match graph");
    let n = g.n();
    let mut time: Vec<Option<u32>> = vec![None; n];
    let mut count = vec![0u32; n];
    let mut frontier: Vec<usize> = seed.to_vec();
    for &v in &frontier {
        time[v] = Some(0);
    }
    let mut round_counts = vec![frontier.len()];
    let mut infected = frontier.len();
    let mut t = 0u32;
    let mut next = Vec::new();
    loop {
        next.clear();
        for &v in &frontier {
            for &w in g.neighbors(v) {
                let w = w as usize;
                if time[w].is_some() {
                    continue;
                }
                count[w] += 1;
                if count[w] as usize == r {
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        t += 1;
        for &w in &next {
            time[w] = Some(t);
        }
        infected += next.len();
        round_counts.push(next.len());
        std::mem::swap(&mut frontier, &mut next);
    }
    PercolationRun {
        r,
        seed: seed.clone(),
        infection_time: time,
        rounds: t,
        round_counts,
        percolated: infected == n,
    }
}

/// The final infected set `⋃ A_t`.
pub fn closure(g: &Graph, seed: &VertexSet, r: usize) -> VertexSet {
    let mut p = Percolator::new(g);
    p.run(seed.iter(), r);
    p.infected_set()
}

pub fn percolates(g: &Graph, seed: &VertexSet, r: usize) -> bool {
    Percolator::new(g).percolates(seed.iter(), r)
}

/// Vertices of degree below `r`: no process can infect them, so every
/// percolating set contains them.
pub fn forced_vertices(g: &Graph, r: usize) -> VertexSet {
    VertexSet::from_vertices(g.n(), (0..g.n()).filter(|&v| g.degree(v) < r))
}

/// Reusable scratch space for repeated closure computations on one graph.
///
/// Infection order does not affect the closure of a monotone rule, so this
/// absorbs vertices greedily from a stack instead of tracking rounds.
pub struct Percolator<'g> {
    g: &'g Graph,
    count: Vec<u32>,
    infected: Vec<bool>,
    stack: Vec<usize>,
    total: usize,
}

impl<'g> Percolator<'g> {
    pub fn new(g: &'g Graph) -> Self {
        Percolator {
            g,
            count: vec![0; g.n()],
            infected: vec![false; g.n()],
            stack: Vec::with_capacity(g.n()),
            total: 0,
        }
    }

    /// Computes the closure of `seed`; returns its size.
    pub fn run(&mut self, seed: impl IntoIterator<Item = usize>, r: usize) -> usize {
        debug_assert!(r >= 1);
        self.count.fill(0);
        self.infected.fill(false);
        self.stack.clear();
        self.total = 0;
        for v in seed {
            if !self.infected[v] {
                self.infected[v] = true;
                self.stack.push(v);
                self.total += 1;
            }
        }
        let r = r as u32;
        while let Some(v) = self.stack.pop() {
            for &w in self.g.neighbors(v) {
                let w = w as usize;
                if self.infected[w] {
                    continue;
                }
                self.count[w] += 1;
                if self.count[w] >= r {
                    self.infected[w] = true;
                    self.stack.push(w);
                    self.total += 1;
                }
            }
        }
        self.total
    }

    pub fn percolates(&mut self, seed: impl IntoIterator<Item = usize>, r: usize) -> bool {
        self.run(seed, r) == self.g.n()
    }

    pub fn infected_set(&self) -> VertexSet {
        VertexSet::from_vertices(
            self.g.n(),
            self.infected.iter().enumerate().filter_map(|(v, &i)| i.then_some(v)),
        )
    }
}
