//! Strong products `G₁ ⊠ … ⊠ G_k` and their coordinate codec.
//!
//! Distinct tuples `(x₁,…,x_k)` and `(y₁,…,y_k)` are adjacent iff for every
//! axis `x_i = y_i` or `x_i y_i` is an edge of `G_i`. Flat indices are
//! row-major with the first factor varying slowest.

use std::fmt;
use std::path::Path;

use rayon::prelude::*;

use crate::graph::MAX_VERTICES;
use crate::{Error, Graph, Result, VertexSet};

/// Ordered list of non-trivial connected factors.
#[derive(Clone, Debug)]
pub struct ProductSpec {
    factors: Vec<Graph>,
}

impl ProductSpec {
    pub fn new(factors: Vec<Graph>) -> Result<ProductSpec> {
        if factors.is_empty() {
            return Err(Error::NoFactors);
        }
        for (index, f) in factors.iter().enumerate() {
            if f.n() < 2 {
                return Err(Error::TrivialFactor { index });
            }
            if !f.is_connected() {
                return Err(Error::DisconnectedFactor { index });
            }
        }
        Ok(ProductSpec { factors })
    }

    pub fn factors(&self) -> &[Graph] {
        &self.factors
    }

    pub fn k(&self) -> usize {
        self.factors.len()
    }

    pub fn radices(&self) -> Vec<usize> {
        self.factors.iter().map(Graph::n).collect()
    }

    /// Factors with at least three vertices.
    pub fn non_edge_factors(&self) -> Vec<usize> {
        (0..self.k()).filter(|&i| self.factors[i].n() >= 3).collect()
    }

    pub fn order(&self) -> Option<usize> {
        self.factors
            .iter()
            .try_fold(1usize, |acc, f| acc.checked_mul(f.n()))
    }

    /// The same factors listed in the order `perm` (`perm[j]` is the
    /// original index of new factor `j`).
    pub fn permuted(&self, perm: &[usize]) -> ProductSpec {
        ProductSpec {
            factors: perm.iter().map(|&i| self.factors[i].clone()).collect(),
        }
    }
}

impl fmt::Display for ProductSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Row-major mixed-radix codec between coordinate tuples and flat indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codec {
    radices: Vec<usize>,
    strides: Vec<usize>,
}

impl Codec {
    pub fn new(radices: Vec<usize>) -> Codec {
        let mut strides = vec![1; radices.len()];
        for i in (0..radices.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * radices[i + 1];
        }
        Codec { radices, strides }
    }

    pub fn radices(&self) -> &[usize] {
        &self.radices
    }

    pub fn k(&self) -> usize {
        self.radices.len()
    }

    pub fn size(&self) -> usize {
        self.radices.iter().product()
    }

    /// Panics on an invalid tuple; see [`Codec::try_encode`].
    pub fn encode(&self, coords: &[usize]) -> usize {
        self.try_encode(coords).expect("valid coordinates")
    }

    pub fn try_encode(&self, coords: &[usize]) -> Result<usize> {
        if coords.len() != self.k() {
            return Err(Error::InvalidCoordinate(format!(
                "expected {} coordinates, got {}",
                self.k(),
                coords.len()
            )));
        }
        let mut idx = 0;
        for (axis, (&x, &r)) in coords.iter().zip(&self.radices).enumerate() {
            if x >= r {
                return Err(Error::InvalidCoordinate(format!(
                    "coordinate {x} on axis {axis} exceeds radix {r}"
                )));
            }
            idx += x * self.strides[axis];
        }
        Ok(idx)
    }

    pub fn encode_all(&self, tuples: &[Vec<usize>]) -> Vec<usize> {
        tuples.iter().map(|t| self.encode(t)).collect()
    }

    pub fn decode(&self, mut idx: usize) -> Vec<usize> {
        assert!(idx < self.size(), "index {idx} out of range");
        let mut out = Vec::with_capacity(self.k());
        for (&s, &r) in self.strides.iter().zip(&self.radices) {
            out.push(idx / s);
            idx %= s;
            debug_assert!(out.last().copied().unwrap() < r);
        }
        out
    }

    /// The `axis`-layer through the point whose other coordinates are `fixed`
    /// (listed in axis order, skipping `axis`).
    pub fn layer(&self, axis: usize, fixed: &[usize]) -> Result<VertexSet> {
        if axis >= self.k() {
            return Err(Error::InvalidCoordinate(format!("axis {axis} out of range")));
        }
        if fixed.len() + 1 != self.k() {
            return Err(Error::InvalidCoordinate(format!(
                "expected {} fixed coordinates, got {}",
                self.k() - 1,
                fixed.len()
            )));
        }
        let ranges: Vec<Vec<usize>> = (0..self.k())
            .map(|i| match i.cmp(&axis) {
                std::cmp::Ordering::Less => vec![fixed[i]],
                std::cmp::Ordering::Equal => (0..self.radices[axis]).collect(),
                std::cmp::Ordering::Greater => vec![fixed[i - 1]],
            })
            .collect();
        self.cuboid(&ranges)
    }

    /// Cartesian product of per-axis coordinate subsets.
    pub fn cuboid(&self, ranges: &[Vec<usize>]) -> Result<VertexSet> {
        if ranges.len() != self.k() {
            return Err(Error::InvalidCoordinate(format!(
                "expected {} ranges, got {}",
                self.k(),
                ranges.len()
            )));
        }
        for (axis, r) in ranges.iter().enumerate() {
            if r.is_empty() {
                return Err(Error::InvalidCoordinate(format!("empty range on axis {axis}")));
            }
            if let Some(&x) = r.iter().find(|&&x| x >= self.radices[axis]) {
                return Err(Error::InvalidCoordinate(format!(
                    "coordinate {x} on axis {axis} exceeds radix {}",
                    self.radices[axis]
                )));
            }
        }
        let mut set = VertexSet::new(self.size());
        for tuple in cartesian(ranges) {
            set.insert(self.encode(&tuple));
        }
        Ok(set)
    }
}

/// All tuples of the Cartesian product, lexicographic in list order.
pub fn cartesian<T: Copy>(ranges: &[Vec<T>]) -> impl Iterator<Item = Vec<T>> + '_ {
    let total: usize = ranges.iter().map(Vec::len).product();
    let mut pos = vec![0usize; ranges.len()];
    (0..total).map(move |step| {
        if step > 0 {
            for axis in (0..ranges.len()).rev() {
                pos[axis] += 1;
                if pos[axis] < ranges[axis].len() {
                    break;
                }
                pos[axis] = 0;
            }
        }
        pos.iter().zip(ranges).map(|(&p, r)| r[p]).collect()
    })
}

/// A constructed strong product: the graph, its codec and its factors.
#[derive(Clone, Debug)]
pub struct StrongProduct {
    graph: Graph,
    codec: Codec,
    spec: ProductSpec,
}

impl StrongProduct {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn codec(&self) -> &Codec {
        &self.codec
    }

    pub fn spec(&self) -> &ProductSpec {
        &self.spec
    }

    pub fn into_parts(self) -> (Graph, Codec) {
        (self.graph, self.codec)
    }
}

pub fn strong_product(spec: &ProductSpec) -> Result<StrongProduct> {
    let n = match spec.order() {
        Some(n) if n <= MAX_VERTICES => n,
        other => {
            return Err(Error::CapacityExceeded {
                n: other.unwrap_or(usize::MAX),
                cap: MAX_VERTICES,
            })
        }
    };
    let codec = Codec::new(spec.radices());
    // closed neighborhoods per factor vertex, sorted
    let closed: Vec<Vec<Vec<usize>>> = spec
        .factors()
        .iter()
        .map(|f| {
            (0..f.n())
                .map(|x| {
                    let mut c: Vec<usize> = f.neighbors(x).iter().map(|&w| w as usize).collect();
                    let at = c.partition_point(|&w| w < x);
                    c.insert(at, x);
                    c
                })
                .collect()
        })
        .collect();
    let rows: Vec<Vec<u32>> = (0..n)
        .into_par_iter()
        .map(|v| {
            let coords = codec.decode(v);
            let ranges: Vec<Vec<usize>> = coords
                .iter()
                .enumerate()
                .map(|(axis, &x)| closed[axis][x].clone())
                .collect();
            // row-major enumeration of sorted per-axis ranges is already sorted
            cartesian(&ranges)
                .map(|t| codec.encode(&t))
                .filter(|&w| w != v)
                .map(|w| w as u32)
                .collect()
        })
        .collect();
    let graph = Graph::from_sorted_rows(rows).with_name(spec.to_string());
    Ok(StrongProduct {
        graph,
        codec,
        spec: spec.clone(),
    })
}

/// Parses `TERM ('x' TERM)*` where a term is a named graph (`C5`, `K2`,
/// `P3`, `S3`, `K1,3`) or `@path` to an edge-list file. Relative paths are
/// resolved against `base`.
pub fn parse_expression(expr: &str, base: Option<&Path>) -> Result<ProductSpec> {
    let terms = split_terms(expr);
    if terms.is_empty() {
        return Err(Error::Parse { line: 1, msg: "empty product expression".into() });
    }
    let mut factors = Vec::with_capacity(terms.len());
    for term in terms {
        factors.push(parse_term(term, base)?);
    }
    ProductSpec::new(factors)
}

fn split_terms(expr: &str) -> Vec<&str> {
    expr.split(|c: char| c == '⊠' || c == '*')
        .flat_map(|chunk| chunk.split(" x "))
        .flat_map(|chunk| chunk.split_whitespace().filter(|t| *t != "x"))
        .collect()
}

pub fn parse_term(term: &str, base: Option<&Path>) -> Result<Graph> {
    match term.strip_prefix('@') {
        Some(path) => {
            let p = Path::new(path);
            let full = match base {
                Some(b) if p.is_relative() => b.join(p),
                _ => p.to_path_buf(),
            };
            let text = std::fs::read_to_string(&full)?;
            let name = full
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.to_string());
            Ok(Graph::parse_edge_list(&text)?.with_name(name))
        }
        None => Graph::parse_named(term),
    }
}
