//! Finite simple graphs on dense vertex indices `0..n`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::{Error, Result, VertexSet};

/// Largest vertex count any graph in this crate may have.
pub const MAX_VERTICES: usize = 1 << 16;

/// Immutable simple graph. Neighbor lists are kept sorted.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<u32>,
    neighbors: Vec<u32>,
    name: Option<String>,
}

/// The named families accepted by [`Graph::named`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    /// `K_{1,k}`, center is vertex 0.
    Star,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P" => Ok(Family::Path),
            "C" => Ok(Family::Cycle),
            "K" => Ok(Family::Complete),
            "S" | "K1,n" | "K1," => Ok(Family::Star),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

impl Family {
    fn prefix(self) -> &'static str {
        match self {
            Family::Path => "P",
            Family::Cycle => "C",
            Family::Complete => "K",
            Family::Star => "S",
        }
    }
}

/// Breadth-first ordering with a parent map into earlier positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BfsLayout {
    pub order: Vec<usize>,
    /// `parent[v]` for every vertex except the root.
    pub parent: Vec<Option<usize>>,
    pub distance: Vec<usize>,
}

impl BfsLayout {
    pub fn root(&self) -> usize {
        self.order[0]
    }

    /// The first vertex after the root, if the graph has one.
    pub fn first_child(&self) -> Option<usize> {
        self.order.get(1).copied()
    }
}

/// A cut-vertex together with the number of components of `G − x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CutVertex {
    pub vertex: usize,
    pub components: usize,
}

impl Graph {
    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded { n, cap: MAX_VERTICES });
        }
        let mut rows: Vec<Vec<u32>> = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            rows[u].push(v as u32);
            rows[v].push(u as u32);
        }
        for row in rows.iter_mut() {
            row.sort_unstable();
            row.dedup();
        }
        Ok(Self::from_sorted_rows(rows))
    }

    /// Rows must be sorted, symmetric and loop-free.
    pub(crate) fn from_sorted_rows(rows: Vec<Vec<u32>>) -> Graph {
        let mut offsets = Vec::with_capacity(rows.len() + 1);
        offsets.push(0u32);
        let total: usize = rows.iter().map(Vec::len).sum();
        let mut neighbors = Vec::with_capacity(total);
        for row in rows {
            neighbors.extend_from_slice(&row);
            offsets.push(neighbors.len() as u32);
        }
        Graph {
            offsets,
            neighbors,
            name: None,
        }
    }

    pub fn named(family: Family, k: usize) -> Result<Graph> {
        let out_of_range = || Error::SizeOutOfRange {
            family: family.prefix().to_string(),
            size: k,
        };
        let g = match family {
            Family::Path => {
                if k == 0 {
                    return Err(out_of_range());
                }
                Graph::from_edges(k, (1..k).map(|i| (i - 1, i)))?
            }
            Family::Cycle => {
                if k < 3 {
                    return Err(out_of_range());
                }
                Graph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k)))?
            }
            Family::Complete => {
                if k == 0 {
                    return Err(out_of_range());
                }
                Graph::from_edges(k, (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))))?
            }
            Family::Star => {
                if k == 0 {
                    return Err(out_of_range());
                }
                Graph::from_edges(k + 1, (1..=k).map(|i| (0, i)))?
            }
        };
        Ok(g.with_name(format!("{}{}", family.prefix(), k)))
    }

    /// `make_named("C", 5)`, `make_named("K1,n", 3)` and so on.
    pub fn make_named(family: &str, k: usize) -> Result<Graph> {
        Graph::named(family.parse()?, k)
    }

    /// Parses `P<k>`, `C<k>`, `K<k>`, `S<k>` and `K1,<k>`.
    pub fn parse_named(s: &str) -> Result<Graph> {
        let s = s.trim();
        let (family, digits) = if let Some(rest) = s.strip_prefix("K1,") {
            (Family::Star, rest)
        } else {
            let split = s
                .find(|c: char| c.is_ascii_digit())
                .ok_or_else(|| Error::UnknownFamily(s.to_string()))?;
            (s[..split].parse::<Family>()?, &s[split..])
        };
        let k = digits
            .parse::<usize>()
            .map_err(|_| Error::UnknownFamily(s.to_string()))?;
        Graph::named(family, k)
    }

    /// Parses the edge-list text format: a header `n m`, then `m` lines `u v`.
    /// Everything after `#` on a line is ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let parse_pair = |line: usize, l: &str| -> Result<(usize, usize)> {
            let mut it = l.split_whitespace().map(|t| {
                t.parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    msg: format!("not a non-negative integer: `{t}`"),
                })
            });
            let a = it.next().ok_or_else(|| Error::Parse { line, msg: "missing value".into() })??;
            let b = it.next().ok_or_else(|| Error::Parse { line, msg: "missing value".into() })??;
            if it.next().is_some() {
                return Err(Error::Parse { line, msg: "expected two values".into() });
            }
            Ok((a, b))
        };
        let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
        let (n, m) = parse_pair(hl, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines.by_ref() {
            edges.push(parse_pair(line, l)?);
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: hl,
                msg: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edges(n, edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Graph {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.neighbors[self.offsets[v] as usize..self.offsets[v + 1] as usize]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        (self.offsets[v + 1] - self.offsets[v]) as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet::from_vertices(self.n(), self.neighbors(v).iter().map(|&w| w as usize))
    }

    pub fn closed_neighbor_set(&self, v: usize) -> VertexSet {
        let mut s = self.neighbor_set(v);
        s.insert(v);
        s
    }

    /// Edges `(u, v)` with `u < v`, in increasing order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .map(|&v| v as usize)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    fn distances_from(&self, root: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in self.neighbors(v) {
                let w = w as usize;
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.distances_from(0).iter().all(Option::is_some)
    }

    /// BFS order sorted by (distance, index); each parent is the smallest
    /// neighbor one level closer to the root.
    pub fn bfs_layout(&self, root: usize) -> Result<BfsLayout> {
        if root >= self.n() {
            return Err(Error::VertexOutOfRange { vertex: root, n: self.n() });
        }
        let dist = self.distances_from(root);
        if dist.iter().any(Option::is_none) {
            return Err(Error::Disconnected);
        }
        let distance: Vec<usize> = dist.into_iter().map(Option::unwrap).collect();
        let mut order: Vec<usize> = (0..self.n()).collect();
        order.sort_by_key(|&v| (distance[v], v));
        let parent = (0..self.n())
            .map(|v| {
                if v == root {
                    return None;
                }
                self.neighbors(v)
                    .iter()
                    .map(|&w| w as usize)
                    .find(|&w| distance[w] + 1 == distance[v])
            })
            .collect();
        Ok(BfsLayout {
            order,
            parent,
            distance,
        })
    }

    /// Classes of vertices with identical closed neighborhoods. Members are
    /// sorted; classes are ordered by their smallest member.
    pub fn closed_twin_classes(&self) -> Vec<Vec<usize>> {
        let mut by_nbhd: HashMap<Vec<u32>, usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for v in 0..self.n() {
            let mut key = self.neighbors(v).to_vec();
            let pos = key.partition_point(|&w| (w as usize) < v);
            key.insert(pos, v as u32);
            match by_nbhd.get(&key) {
                Some(&c) => classes[c].push(v),
                None => {
                    by_nbhd.insert(key, classes.len());
                    classes.push(vec![v]);
                }
            }
        }
        classes
    }

    /// Cut-vertices in increasing order, each with the component count of
    /// `G − x`. Uses an iterative Hopcroft–Tarjan DFS per connected component.
    pub fn cut_vertices(&self) -> Vec<CutVertex> {
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        // number of DFS children c with low[c] >= disc[v]
        let mut separated = vec![0usize; n];
        let mut is_root = vec![false; n];
        let mut timer = 0;
        for start in 0..n {
            if disc[start] != usize::MAX {
                continue;
            }
            is_root[start] = true;
            disc[start] = timer;
            low[start] = timer;
            timer += 1;
            // (vertex, parent, next neighbor position)
            let mut stack = vec![(start, usize::MAX, 0usize)];
            while let Some(&mut (v, parent, ref mut pos)) = stack.last_mut() {
                let nbrs = self.neighbors(v);
                if *pos < nbrs.len() {
                    let w = nbrs[*pos] as usize;
                    *pos += 1;
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, v, 0));
                    } else if w != parent {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] >= disc[parent] {
                            separated[parent] += 1;
                        }
                    }
                }
            }
        }
        (0..n)
            .filter_map(|v| {
                let components = if is_root[v] {
                    separated[v]
                } else {
                    separated[v] + 1
                };
                (components >= 2).then_some(CutVertex { vertex: v, components })
            })
            .collect()
    }

    /// Whether the three vertices of `s` span a (not necessarily induced)
    /// path `P₃`, or are the leaves of a `K_{1,3}` whose center lies outside `s`.
    pub fn lies_in_p3_or_k13(&self, s: &VertexSet) -> Result<bool> {
        let v: Vec<usize> = s.to_vec();
        if v.len() != 3 {
            return Err(Error::SetSize { expected: 3, found: v.len() });
        }
        let edges = [(0, 1), (0, 2), (1, 2)]
            .iter()
            .filter(|&&(i, j)| self.has_edge(v[i], v[j]))
            .count();
        if edges >= 2 {
            return Ok(true);
        }
        let common = (0..self.n())
            .filter(|z| !s.contains(*z))
            .any(|z| v.iter().all(|&x| self.has_edge(z, x)));
        Ok(common)
    }

    /// Induced subgraph on `keep` (relabelled in increasing order).
    pub fn induced(&self, keep: &VertexSet) -> Result<Graph> {
        let map: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let edges: Vec<(usize, usize)> = self
            .edges()
            .filter_map(|(u, v)| Some((*map.get(&u)?, *map.get(&v)?)))
            .collect();
        Graph::from_edges(map.len(), edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(name) => write!(f, "{name}"),
            None => write!(f, "G(n={}, m={})", self.n(), self.edge_count()),
        }
    }
}

/// The graph G′: a 4-cycle `1–2–5–4–1` with two leaves `0` and `3` hanging
/// off vertex `1`. Its unique minimum 2-percolating set is `{0, 3, 5}`.
pub fn pendant_square() -> Graph {
    Graph::from_edges(6, [(1, 2), (2, 5), (5, 4), (4, 1), (0, 1), (3, 1)])
        .expect("valid edge list")
        .with_name("G'")
}
