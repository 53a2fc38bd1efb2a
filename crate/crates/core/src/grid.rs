//! Finite windows of the strong grid ℤⁿ.
//!
//! Two lattice points are adjacent when they differ by at most one in every
//! coordinate. The closure computed inside a window never exceeds the
//! closure in ℤⁿ, which gives two certificates:
//!
//! - box induction: if the closure of `[1,m]ⁿ` contains `[0,m+1]ⁿ`, every
//!   translate of the box by a vector in `{−1,0,1}ⁿ` is infected, so the
//!   infected box grows by one on every side forever;
//! - interior stall: a window fixpoint that stays off the two outermost
//!   layers gives no infected neighbor to any point outside the window, so
//!   it is also a fixpoint in ℤⁿ.

use serde::Serialize;

use crate::product::cartesian;
use crate::{Error, Result, VertexSet};

/// Largest number of lattice points in a window.
pub const MAX_CELLS: usize = 1 << 28;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    lo: Vec<i64>,
    hi: Vec<i64>,
    strides: Vec<usize>,
    infected: VertexSet,
}

impl Window {
    /// The box `∏ [lo_i, hi_i]` with nothing infected.
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Result<Window> {
        if lo.is_empty() || lo.len() != hi.len() {
            return Err(Error::ParameterRange("window bounds must have one entry per axis".into()));
        }
        if lo.iter().zip(&hi).any(|(l, h)| h < l) {
            return Err(Error::ParameterRange("window needs hi ≥ lo on every axis".into()));
        }
        let mut size = 1usize;
        let mut strides = vec![0; lo.len()];
        for i in (0..lo.len()).rev() {
            strides[i] = size;
            let side = usize::try_from(hi[i] - lo[i] + 1).unwrap_or(usize::MAX);
            size = size
                .checked_mul(side)
                .filter(|&s| s <= MAX_CELLS)
                .ok_or(Error::CapacityExceeded { n: usize::MAX, cap: MAX_CELLS })?;
        }
        Ok(Window {
            lo,
            hi,
            strides,
            infected: VertexSet::new(size),
        })
    }

    /// `[lo, hi]ⁿ`.
    pub fn cube(dim: usize, lo: i64, hi: i64) -> Result<Window> {
        Window::new(vec![lo; dim], vec![hi; dim])
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn lo(&self) -> &[i64] {
        &self.lo
    }

    pub fn hi(&self) -> &[i64] {
        &self.hi
    }

    pub fn cells(&self) -> usize {
        self.infected.universe()
    }

    pub fn index(&self, p: &[i64]) -> Option<usize> {
        if p.len() != self.dim() {
            return None;
        }
        let mut idx = 0;
        for i in 0..p.len() {
            if p[i] < self.lo[i] || p[i] > self.hi[i] {
                return None;
            }
            idx += (p[i] - self.lo[i]) as usize * self.strides[i];
        }
        Some(idx)
    }

    pub fn point(&self, mut idx: usize) -> Vec<i64> {
        let mut p = vec![0; self.dim()];
        for i in 0..self.dim() {
            p[i] = self.lo[i] + (idx / self.strides[i]) as i64;
            idx %= self.strides[i];
        }
        p
    }

    pub fn infect(&mut self, p: &[i64]) -> Result<()> {
        let idx = self.index(p).ok_or(Error::OutsideWindow)?;
        self.infected.insert(idx);
        Ok(())
    }

    /// Infects every point of `∏ [lo_i, hi_i]`.
    pub fn infect_box(&mut self, lo: &[i64], hi: &[i64]) -> Result<()> {
        let ranges: Vec<Vec<i64>> = lo.iter().zip(hi).map(|(&l, &h)| (l..=h).collect()).collect();
        for p in cartesian(&ranges) {
            self.infect(&p)?;
        }
        Ok(())
    }

    pub fn is_infected(&self, p: &[i64]) -> bool {
        self.index(p).is_some_and(|i| self.infected.contains(i))
    }

    pub fn infected_count(&self) -> usize {
        self.infected.len()
    }

    pub fn infected_points(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        self.infected.iter().map(|i| self.point(i))
    }

    /// True iff every point of the box is infected.
    pub fn contains_box(&self, lo: &[i64], hi: &[i64]) -> bool {
        let ranges: Vec<Vec<i64>> = lo.iter().zip(hi).map(|(&l, &h)| (l..=h).collect()).collect();
        let all = cartesian(&ranges).all(|p| self.is_infected(&p));
        all
    }

    /// Smallest distance from an infected point to the window boundary,
    /// `None` when nothing is infected.
    pub fn boundary_distance(&self) -> Option<i64> {
        self.infected_points()
            .map(|p| {
                (0..self.dim())
                    .map(|i| (p[i] - self.lo[i]).min(self.hi[i] - p[i]))
                    .min()
                    .unwrap_or(0)
            })
            .min()
    }

    /// Bounding box `(lo, hi)` of the infected points.
    pub fn infected_bounds(&self) -> Option<(Vec<i64>, Vec<i64>)> {
        let mut it = self.infected_points();
        let first = it.next()?;
        let (mut lo, mut hi) = (first.clone(), first);
        for p in it {
            for i in 0..p.len() {
                lo[i] = lo[i].min(p[i]);
                hi[i] = hi[i].max(p[i]);
            }
        }
        Some((lo, hi))
    }

    fn neighbor_indices(&self, idx: usize, offsets: &[Vec<i64>], out: &mut Vec<usize>) {
        out.clear();
        let p = self.point(idx);
        'next: for d in offsets {
            let mut j = idx as i64;
            for i in 0..p.len() {
                let x = p[i] + d[i];
                if x < self.lo[i] || x > self.hi[i] {
                    continue 'next;
                }
                j += d[i] * self.strides[i] as i64;
            }
            out.push(j as usize);
        }
    }
}

/// Final window plus the number of points infected in each round.
#[derive(Clone, Debug)]
pub struct GridRun {
    pub window: Window,
    /// `round_counts[0]` is the seed size.
    pub round_counts: Vec<usize>,
}

fn offsets(dim: usize) -> Vec<Vec<i64>> {
    let unit = vec![vec![-1i64, 0, 1]; dim];
    cartesian(&unit).filter(|d| d.iter().any(|&x| x != 0)).collect()
}

/// Synchronous closure under the r-rule restricted to the window. The
/// window's infected points are the seed.
pub fn grid_closure(seed: &Window, r: usize) -> GridRun {
    assert!(r >= 1, "threshold must be at least 1");
    let mut w = seed.clone();
    let offs = offsets(w.dim());
    let mut count = vec![0u32; w.cells()];
    let mut frontier: Vec<usize> = w.infected.iter().collect();
    let mut round_counts = vec![frontier.len()];
    let mut next = Vec::new();
    let mut nbrs = Vec::with_capacity(offs.len());
    loop {
        next.clear();
        for &v in &frontier {
            w.neighbor_indices(v, &offs, &mut nbrs);
            for &u in &nbrs {
                if w.infected.contains(u) {
                    continue;
                }
                count[u] += 1;
                if count[u] as usize == r {
                    next.push(u);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        for &u in &next {
            w.infected.insert(u);
        }
        round_counts.push(next.len());
        std::mem::swap(&mut frontier, &mut next);
    }
    GridRun {
        window: w,
        round_counts,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum GridVerdict {
    PercolatesByBoxInduction { box_side: usize },
    StalledInterior { infected: usize, lo: Vec<i64>, hi: Vec<i64> },
    Inconclusive { infected: usize },
}

impl GridVerdict {
    pub fn percolates(&self) -> bool {
        matches!(self, GridVerdict::PercolatesByBoxInduction { .. })
    }

    pub fn stalled(&self) -> bool {
        matches!(self, GridVerdict::StalledInterior { .. })
    }
}

fn stall_verdict(w: &Window) -> Option<GridVerdict> {
    if w.boundary_distance().is_none_or(|d| d >= 2) {
        let (lo, hi) = w.infected_bounds().unwrap_or_default();
        return Some(GridVerdict::StalledInterior {
            infected: w.infected_count(),
            lo,
            hi,
        });
    }
    None
}

/// The window `[1 − margin, m + margin]ⁿ` with `[1, m]ⁿ` infected.
pub fn box_seed(dim: usize, m: usize, margin: usize) -> Result<Window> {
    let (m, margin) = (m as i64, margin as i64);
    let mut w = Window::cube(dim, 1 - margin, m + margin)?;
    w.infect_box(&vec![1; dim], &vec![m; dim])?;
    Ok(w)
}

/// Closure of the full box `[1, m]ⁿ`, classified.
pub fn box_expansion_test(dim: usize, r: usize, m: usize, margin: usize) -> Result<GridVerdict> {
    if dim == 0 || m == 0 || r == 0 {
        return Err(Error::ParameterRange("dimension, threshold and box side must be positive".into()));
    }
    if margin < 2 {
        return Err(Error::Padding { needed: 2 });
    }
    let run = grid_closure(&box_seed(dim, m, margin)?, r);
    let w = &run.window;
    if w.contains_box(&vec![0; dim], &vec![m as i64 + 1; dim]) {
        return Ok(GridVerdict::PercolatesByBoxInduction { box_side: m });
    }
    Ok(stall_verdict(w).unwrap_or(GridVerdict::Inconclusive {
        infected: w.infected_count(),
    }))
}

/// True iff the closure of the seed stays at distance ≥ 2 from the window
/// boundary, which certifies that the seed does not percolate ℤⁿ.
pub fn stall_certificate(seed: &Window, r: usize) -> Result<bool> {
    if seed.boundary_distance().is_some_and(|d| d < 2) {
        return Err(Error::Padding { needed: 2 });
    }
    Ok(stall_verdict(&grid_closure(seed, r).window).is_some())
}

/// `(2ⁿ − 1, 3ⁿ⁻¹)`: a finite set percolates ℤⁿ at the lower threshold,
/// and none does above the upper one.
pub fn fpt_bounds(n: u32) -> (u64, u64) {
    assert!(n >= 1);
    ((1u64 << n) - 1, 3u64.pow(n - 1))
}

#[derive(Clone, Debug, Serialize)]
pub struct ThresholdProbe {
    pub r: usize,
    /// Smallest side whose box percolates by induction, if any up to the limit.
    pub min_box_side: Option<usize>,
    /// Sides up to the limit whose boxes stall.
    pub stalled_sides: Vec<usize>,
    pub inconclusive_sides: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FptReport {
    pub n: u32,
    pub lower: u64,
    pub upper: u64,
    /// Largest threshold with a box certificate.
    pub certified_lower: Option<usize>,
    pub probes: Vec<ThresholdProbe>,
}

/// Probes full boxes of side `1..=max_side` for every threshold from the
/// formulaic lower bound to one above the upper bound.
pub fn fpt_probe(n: u32, max_side: usize, margin: usize) -> Result<FptReport> {
    let (lower, upper) = fpt_bounds(n);
    let mut probes = Vec::new();
    for r in lower as usize..=upper as usize + 1 {
        let mut probe = ThresholdProbe {
            r,
            min_box_side: None,
            stalled_sides: Vec::new(),
            inconclusive_sides: Vec::new(),
        };
        for m in 1..=max_side {
            match box_expansion_test(n as usize, r, m, margin)? {
                GridVerdict::PercolatesByBoxInduction { .. } => {
                    probe.min_box_side = Some(m);
                    break;
                }
                GridVerdict::StalledInterior { .. } => probe.stalled_sides.push(m),
                GridVerdict::Inconclusive { .. } => probe.inconclusive_sides.push(m),
            }
        }
        probes.push(probe);
    }
    let certified_lower = probes.iter().filter(|p| p.min_box_side.is_some()).map(|p| p.r).max();
    Ok(FptReport {
        n,
        lower,
        upper,
        certified_lower,
        probes,
    })
}
