//! Explicit percolating sets for strong products.
//!
//! Each generator builds its seed in a working factor order, maps it back
//! to the caller's coordinates and runs the engine before returning. A seed
//! that fails to percolate is reported as [`Error::VerificationFailed`].
//!
//! Anchors inside a factor are chosen deterministically:
//!
//! - a three-vertex path `v₁ v₂ v₃` is the lexicographically least walk
//!   `(a, b, c)` with `a < c`;
//! - a two-vertex anchor `{v₁, v₂}` is the BFS root `0` and its first child.

use serde::Serialize;

use crate::engine::{self, Percolator};
use crate::product::{cartesian, strong_product, Codec, ProductSpec, StrongProduct};
use crate::solver::{self, SolveOptions};
use crate::{Error, Graph, Result, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    Corner,
    CycleClique,
    TwoBig,
    ThreeBig,
    AllBig,
    Prism3,
    R4,
    R5,
}

#[derive(Clone, Debug, Serialize)]
pub struct SeedCertificate {
    pub construction: Construction,
    pub product: String,
    /// `permutation[j]` is the caller's index of working factor `j`.
    pub permutation: Vec<usize>,
    pub r: usize,
    pub seed: VertexSet,
    /// Seed tuples in the caller's factor order, increasing.
    pub coordinates: Vec<Vec<usize>>,
    pub claimed_size: usize,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Least walk `(a, b, c)` with `ab, bc ∈ E` and `a < c`.
pub fn path3(g: &Graph) -> Option<[usize; 3]> {
    for a in 0..g.n() {
        for &b in g.neighbors(a) {
            let b = b as usize;
            if let Some(&c) = g.neighbors(b).iter().find(|&&c| c as usize > a) {
                return Some([a, b, c as usize]);
            }
        }
    }
    None
}

/// BFS root `0` and its first child.
pub fn edge_anchor(g: &Graph) -> Result<[usize; 2]> {
    let layout = g.bfs_layout(0)?;
    let child = layout
        .first_child()
        .ok_or_else(|| Error::Precondition("factor has a single vertex".into()))?;
    Ok([layout.root(), child])
}

fn big_path(g: &Graph) -> Result<[usize; 3]> {
    path3(g).ok_or_else(|| Error::Precondition("factor has no path on three vertices".into()))
}

/// Working factor order: the first `t` factors of order ≥ 3, then the rest,
/// each group in its original order.
fn big_first(spec: &ProductSpec, t: usize) -> Result<Vec<usize>> {
    let big = spec.non_edge_factors();
    if big.len() < t {
        return Err(Error::NotEnoughBigFactors {
            needed: t,
            found: big.len(),
        });
    }
    let mut perm: Vec<usize> = big[..t].to_vec();
    perm.extend((0..spec.k()).filter(|i| !big[..t].contains(i)));
    Ok(perm)
}

struct Draft<'a> {
    construction: Construction,
    spec: &'a ProductSpec,
    permutation: Vec<usize>,
    r: usize,
    claimed_size: usize,
    tuples: Vec<Vec<usize>>,
    note: Option<String>,
}

impl Draft<'_> {
    fn finish(self) -> Result<SeedCertificate> {
        let prod = strong_product(self.spec)?;
        self.finish_on(&prod)
    }

    fn finish_on(self, prod: &StrongProduct) -> Result<SeedCertificate> {
        let codec = prod.codec();
        let mut seed = VertexSet::new(codec.size());
        for t in &self.tuples {
            let mut original = vec![0; t.len()];
            for (j, &x) in t.iter().enumerate() {
                original[self.permutation[j]] = x;
            }
            seed.insert(codec.try_encode(&original)?);
        }
        if seed.len() != self.claimed_size {
            return Err(Error::VerificationFailed(format!(
                "{:?} produced {} vertices, expected {}",
                self.construction,
                seed.len(),
                self.claimed_size
            )));
        }
        if !engine::percolates(prod.graph(), &seed, self.r) {
            return Err(Error::VerificationFailed(format!(
                "{:?} seed does not percolate {} at r = {}",
                self.construction, self.spec, self.r
            )));
        }
        Ok(SeedCertificate {
            construction: self.construction,
            product: self.spec.to_string(),
            permutation: self.permutation,
            r: self.r,
            coordinates: seed.iter().map(|v| codec.decode(v)).collect(),
            seed,
            claimed_size: self.claimed_size,
            verified: true,
            note: self.note,
        })
    }
}

fn pow2(e: usize) -> usize {
    1usize.checked_shl(e as u32).unwrap_or(usize::MAX)
}

/// `r` tuples over `{v₁, v₂}` per factor, taken in lexicographic order.
///
/// For `r < k` the trailing factors `G_r … G_k` are merged into one factor
/// whose anchors come from the BFS of the merged product graph.
pub fn seed_corner(spec: &ProductSpec, r: usize) -> Result<SeedCertificate> {
    let k = spec.k();
    if r == 0 || r > pow2(k - 1).max(1) {
        return Err(Error::ParameterRange(format!(
            "corner seeds need 1 ≤ r ≤ 2^(k-1) = {}",
            pow2(k - 1)
        )));
    }
    let order = spec.order().unwrap_or(usize::MAX);
    if order < r {
        return Err(Error::ParameterRange(format!("product has {order} < r vertices")));
    }
    // anchors[j] lists the two candidate tuples-fragments for working factor j
    let mut anchors: Vec<[Vec<usize>; 2]> = Vec::new();
    let head = if r < k { r - 1 } else { k };
    for g in &spec.factors()[..head] {
        let [a, b] = edge_anchor(g)?;
        anchors.push([vec![a], vec![b]]);
    }
    let mut note = None;
    if head < k {
        let tail = ProductSpec::new(spec.factors()[head..].to_vec())?;
        let merged = strong_product(&tail)?;
        let [a, b] = edge_anchor(merged.graph())?;
        anchors.push([merged.codec().decode(a), merged.codec().decode(b)]);
        note = Some(format!("factors {}..{} merged into one", head, k - 1));
    }
    let width = anchors.len();
    let tuples = (0..r)
        .map(|mask| {
            (0..width)
                .flat_map(|j| anchors[j][(mask >> (width - 1 - j)) & 1].iter().copied())
                .collect()
        })
        .collect();
    Draft {
        construction: Construction::Corner,
        spec,
        permutation: (0..k).collect(),
        r,
        claimed_size: r,
        tuples,
        note,
    }
    .finish()
}

/// Seed of size `2^(k−1) − 1 + ⌈n/2⌉` on `C_n ⊠ K₂^(k−1)`, verified at
/// threshold `2^(k−1) + 1`. The `K₂` factors together index the clique.
pub fn seed_cycle_clique(n: usize, k: usize) -> Result<SeedCertificate> {
    if n < 3 || k < 2 {
        return Err(Error::ParameterRange("cycle-clique needs n ≥ 3 and k ≥ 2".into()));
    }
    let clique = pow2(k - 1);
    let mut factors = vec![Graph::parse_named(&format!("C{n}"))?];
    factors.extend(std::iter::repeat_n(Graph::parse_named("K2")?, k - 1));
    let spec = ProductSpec::new(factors)?;
    let flat = Codec::new(vec![2; k - 1]);
    let last = if n % 2 == 0 { n - 2 } else { n - 1 };
    let tuples = (0..clique)
        .map(|p| (0, p))
        .chain((2..=last).step_by(2).map(|i| (i, 0)))
        .map(|(i, p)| {
            let mut t = vec![i];
            t.extend(flat.decode(p));
            t
        })
        .collect();
    Draft {
        construction: Construction::CycleClique,
        spec: &spec,
        permutation: (0..k).collect(),
        r: clique + 1,
        claimed_size: clique - 1 + n.div_ceil(2),
        tuples,
        note: None,
    }
    .finish()
}

/// Size-`r` seed for `2^(k−1) < r ≤ 3·2^(k−2)` using two factors of order
/// at least three; smaller `r` falls back to [`seed_corner`].
pub fn seed_two_big(spec: &ProductSpec, r: usize) -> Result<SeedCertificate> {
    let k = spec.k();
    let perm = big_first(spec, 2)?;
    let full = 3 * pow2(k - 2);
    if r > full {
        return Err(Error::ParameterRange(format!("two-big seeds need r ≤ 3·2^(k-2) = {full}")));
    }
    if r <= pow2(k - 1) {
        let mut cert = seed_corner(spec, r)?;
        cert.note = Some("r ≤ 2^(k-1): corner construction".into());
        return Ok(cert);
    }
    let work = spec.permuted(&perm);
    let p = big_path(&work.factors()[0])?;
    let second = big_path(&work.factors()[1])?[0];
    let mut ranges = vec![p.to_vec(), vec![second]];
    for g in &work.factors()[2..] {
        ranges.push(edge_anchor(g)?.to_vec());
    }
    let drop = full - r;
    let mut removed = 0;
    let tuples = cartesian(&ranges)
        .filter(|t| {
            if t[0] == p[1] && removed < drop {
                removed += 1;
                false
            } else {
                true
            }
        })
        .collect();
    Draft {
        construction: Construction::TwoBig,
        spec,
        permutation: perm,
        r,
        claimed_size: r,
        tuples,
        note: (drop > 0).then(|| format!("{drop} vertices removed from the middle row")),
    }
    .finish()
}

/// Seed of size `7·2^(k−3)` verified at the same threshold, using three
/// factors of order at least three.
pub fn seed_three_big(spec: &ProductSpec) -> Result<SeedCertificate> {
    let k = spec.k();
    let perm = big_first(spec, 3)?;
    let work = spec.permuted(&perm);
    let p1 = big_path(&work.factors()[0])?;
    let p2 = big_path(&work.factors()[1])?;
    let v3 = big_path(&work.factors()[2])?[0];
    let mut ranges = vec![p1.to_vec(), p2.to_vec(), vec![v3]];
    for g in &work.factors()[3..] {
        ranges.push(edge_anchor(g)?.to_vec());
    }
    let size = 7 * pow2(k - 3);
    let tuples = cartesian(&ranges)
        .filter(|t| !(t[1] == p2[1] && (t[0] == p1[1] || t[0] == p1[0])))
        .collect();
    Draft {
        construction: Construction::ThreeBig,
        spec,
        permutation: perm,
        r: size,
        claimed_size: size,
        tuples,
        note: None,
    }
    .finish()
}

/// Seed of size `3^(k−1) − k` verified at threshold `2^k − 1`; needs
/// `k ≥ 4` factors, all of order at least three.
pub fn seed_all_big(spec: &ProductSpec) -> Result<SeedCertificate> {
    let k = spec.k();
    if k < 4 {
        return Err(Error::ParameterRange("all-big seeds need k ≥ 4".into()));
    }
    let big = spec.non_edge_factors().len();
    if big < k {
        return Err(Error::NotEnoughBigFactors { needed: k, found: big });
    }
    let paths: Vec<[usize; 3]> = spec.factors().iter().map(big_path).collect::<Result<_>>()?;
    let mut ranges: Vec<Vec<usize>> = paths[..k - 1].iter().map(|p| p.to_vec()).collect();
    ranges.push(vec![paths[k - 1][0]]);
    // U: the all-middle tuple and the k−1 tuples with one end coordinate
    let excluded = |t: &Vec<usize>| {
        let ends = (0..k - 1).filter(|&i| t[i] == paths[i][2]).count();
        let middles = (0..k - 1).filter(|&i| t[i] == paths[i][1]).count();
        middles + ends == k - 1 && ends <= 1
    };
    let tuples = cartesian(&ranges).filter(|t| !excluded(t)).collect();
    Draft {
        construction: Construction::AllBig,
        spec,
        permutation: (0..k).collect(),
        r: pow2(k) - 1,
        claimed_size: 3usize.pow(k as u32 - 1) - k,
        tuples,
        note: None,
    }
    .finish()
}

/// Three seeds in one `G`-layer of `G ⊠ K₂` percolating at threshold 3, or
/// `None` when `m(G,2) > 3` or no minimum set spans a `P₃` or the leaves of
/// a `K₁,₃`.
pub fn seed_prism3(g: &Graph) -> Result<Option<SeedCertificate>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let spec = ProductSpec::new(vec![g.clone(), Graph::parse_named("K2")?])?;
    let draft = |tuples: Vec<Vec<usize>>, note: String| Draft {
        construction: Construction::Prism3,
        spec: &spec,
        permutation: vec![0, 1],
        r: 3,
        claimed_size: 3,
        tuples,
        note: Some(note),
    };
    if g.n() == 2 {
        let tuples = vec![vec![0, 0], vec![1, 0], vec![0, 1]];
        return draft(tuples, "G ⊠ K₂ is K₄".into()).finish().map(Some);
    }
    let opts = SolveOptions::sequential();
    let res = solver::percolation_number(g, 2, &opts);
    let layer = |s: &[usize]| s.iter().map(|&v| vec![v, 0]).collect::<Vec<_>>();
    match res.m {
        Some(2) => {
            let pair = res.witness.to_vec();
            let (u, v) = (pair[0], pair[1]);
            let w = (0..g.n())
                .find(|&w| g.has_edge(w, u) && g.has_edge(w, v))
                .ok_or_else(|| Error::VerificationFailed("percolating pair without a common neighbor".into()))?;
            let note = format!("percolating pair {{{u}, {v}}} with common neighbor {w}");
            draft(layer(&[u, v, w]), note).finish().map(Some)
        }
        Some(3) => {
            for s in solver::enumerate_minimum_sets(g, 2, &opts)? {
                if g.lies_in_p3_or_k13(&s)? {
                    let note = format!("minimum 2-percolating triple {:?}", s);
                    return draft(layer(&s.to_vec()), note).finish().map(Some);
                }
            }
            Ok(None)
        }
        _ => Ok(None),
    }
}

/// All 2-percolating pairs `(u, v)` with `u < v`, lexicographically.
pub fn percolating_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let mut p = Percolator::new(g);
    let n = g.n();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| p.percolates([u, v], 2))
        .collect()
}

/// The pair first, then the rest by synchronous 2-percolation time, ties by
/// index. Every later vertex has two earlier neighbors.
pub fn infection_order(g: &Graph, pair: (usize, usize)) -> Vec<usize> {
    let run = engine::percolate(g, &VertexSet::from_vertices(g.n(), [pair.0, pair.1]), 2);
    let mut rest: Vec<usize> = (0..g.n()).filter(|&v| v != pair.0 && v != pair.1).collect();
    rest.sort_by_key(|&v| (run.infection_time[v].unwrap_or(u32::MAX), v));
    let mut order = vec![pair.0, pair.1];
    order.extend(rest);
    order
}

struct TwoFactor {
    spec: ProductSpec,
    g_order: Vec<usize>,
    h_order: Vec<usize>,
    adjacent: bool,
}

impl TwoFactor {
    fn new(g: &Graph, h: &Graph) -> Result<TwoFactor> {
        let spec = ProductSpec::new(vec![g.clone(), h.clone()])?;
        let gp = percolating_pairs(g);
        let hp = percolating_pairs(h);
        if gp.is_empty() || hp.is_empty() {
            return Err(Error::Precondition("both factors need m(·,2) = 2".into()));
        }
        let first_adjacent = |g: &Graph, ps: &[(usize, usize)]| ps.iter().copied().find(|&(u, v)| g.has_edge(u, v));
        let (ga, ha) = (first_adjacent(g, &gp), first_adjacent(h, &hp));
        let (gpair, hpair) = (ga.unwrap_or(gp[0]), ha.unwrap_or(hp[0]));
        Ok(TwoFactor {
            spec,
            g_order: infection_order(g, gpair),
            h_order: infection_order(h, hpair),
            adjacent: ga.is_some() || ha.is_some(),
        })
    }

    fn at(&self, i: usize, j: usize) -> Vec<usize> {
        vec![self.g_order[i], self.h_order[j]]
    }

    fn base(&self) -> Vec<Vec<usize>> {
        let mut t = vec![self.at(0, 0), self.at(0, 1), self.at(1, 0), self.at(1, 1)];
        if !self.adjacent {
            t.push(self.at(2, 0));
        }
        t
    }

    fn draft(&self, construction: Construction, r: usize, tuples: Vec<Vec<usize>>, note: String) -> Draft<'_> {
        Draft {
            construction,
            spec: &self.spec,
            permutation: vec![0, 1],
            r,
            claimed_size: tuples.len(),
            tuples,
            note: Some(note),
        }
    }
}

/// Threshold-4 seed on `G ⊠ H` when both factors have a 2-percolating pair:
/// four vertices if one of the pairs can be taken adjacent, else five.
pub fn seed_two_factor_r4(g: &Graph, h: &Graph) -> Result<SeedCertificate> {
    let tf = TwoFactor::new(g, h)?;
    let note = if tf.adjacent { "adjacent percolating pair" } else { "no adjacent percolating pair" };
    tf.draft(Construction::R4, 4, tf.base(), note.into()).finish()
}

/// Threshold-5 seed on `G ⊠ H`: the threshold-4 seed plus one vertex of the
/// `3 × 3` block spanned by the first three vertices of each infection order.
///
/// The extra vertex is the first of `(g₂,h₃), (g₃,h₁), (g₁,h₃), (g₃,h₂),
/// (g₃,h₃)` and then the remaining block vertices that is not already in the
/// seed and makes it percolate.
pub fn seed_two_factor_r5(g: &Graph, h: &Graph) -> Result<SeedCertificate> {
    if g.n() < 3 || h.n() < 3 {
        return Err(Error::Precondition("both factors need at least three vertices".into()));
    }
    let tf = TwoFactor::new(g, h)?;
    let prod = strong_product(&tf.spec)?;
    let base = tf.base();
    let preferred = [(1, 2), (2, 0), (0, 2), (2, 1), (2, 2)];
    let block = (0..3).flat_map(|i| (0..3).map(move |j| (i, j)));
    let mut p = Percolator::new(prod.graph());
    for (i, j) in preferred.into_iter().chain(block) {
        let extra = tf.at(i, j);
        if base.contains(&extra) {
            continue;
        }
        let mut tuples = base.clone();
        tuples.push(extra);
        let flat: Vec<usize> = tuples.iter().map(|t| prod.codec().encode(t)).collect();
        if p.percolates(flat, 5) {
            let note = format!("extra vertex at order positions ({}, {})", i + 1, j + 1);
            return tf.draft(Construction::R5, 5, tuples, note).finish_on(&prod);
        }
    }
    Err(Error::VerificationFailed("no extra vertex of the 3 × 3 block percolates at r = 5".into()))
}
