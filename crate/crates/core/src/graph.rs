//! Finite simple graphs and the edge-list file format.
//!
//! ```text
//! n=3
//! 0 1
//! 1 2
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge ({0},{1}) listed twice")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for n={n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
}

/// Undirected simple graph on vertices `0..n`. Edges are stored as `(i, j)` with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

#[derive(Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = GraphError;

    fn try_from(raw: RawGraph) -> Result<Self, Self::Error> {
        Graph::new(raw.n, raw.edges)
    }
}

impl Graph {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for (i, j) in edges {
            if i == j {
                return Err(GraphError::Loop(i));
            }
            for v in [i, j] {
                if v >= n {
                    return Err(GraphError::OutOfRange { vertex: v, n });
                }
            }
            let e = (i.min(j), i.max(j));
            if !set.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Graph { n, edges: set })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Graph { n, edges }
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|i| (i - 1, i)).collect();
        Graph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    /// Disjoint union with every vertex of `self` joined to every vertex of `other`.
    /// Vertices of `other` are shifted by `self.n()`.
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(i, j)| (i + shift, j + shift)));
        for i in 0..self.n {
            for j in 0..other.n {
                edges.insert((i, j + shift));
            }
        }
        Graph {
            n: self.n + other.n,
            edges,
        }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges = self
            .edges
            .iter()
            .map(|&(i, j)| {
                let (a, b) = (perm[i], perm[j]);
                (a.min(b), a.max(b))
            })
            .collect();
        Graph { n: self.n, edges }
    }

    /// Adjacency bitmask, bit `i*n+j` for `i<j`. Only meaningful for small `n`.
    fn edge_mask(&self) -> u64 {
        self.edges
            .iter()
            .fold(0u64, |m, &(i, j)| m | (1u64 << (i * self.n + j)))
    }

    /// Smallest relabelling under the edge mask order; equal for isomorphic graphs.
    pub fn canonical_form(&self) -> Graph {
        assert!(self.n <= 8, "canonical form is brute force; n must be small");
        let mut perm: Vec<usize> = (0..self.n).collect();
        let mut best = self.clone();
        let mut best_mask = best.edge_mask();
        loop {
            let g = self.relabel(&perm);
            let m = g.edge_mask();
            if m < best_mask {
                best_mask = m;
                best = g;
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        best
    }

    /// Every labelled graph on `n` vertices.
    pub fn all_labelled(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        assert!(pairs.len() < 31, "too many graphs to enumerate");
        (0u32..(1 << pairs.len()))
            .map(|mask| Graph {
                n,
                edges: pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask & (1 << k) != 0)
                    .map(|(_, &e)| e)
                    .collect(),
            })
            .collect()
    }

    /// One representative per isomorphism class on `n` vertices.
    pub fn isomorphism_classes(n: usize) -> Vec<Graph> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for g in Graph::all_labelled(n) {
            let c = g.canonical_form();
            if seen.insert(c.edge_mask()) {
                out.push(c);
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Graph, GraphError> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            match n {
                None => {
                    let v = line
                        .strip_prefix("n=")
                        .or_else(|| line.strip_prefix("n ="))
                        .map(str::trim)
                        .ok_or_else(|| GraphError::Syntax {
                            line: line_no,
                            msg: "expected `n=<int>`".into(),
                        })?;
                    n = Some(v.parse().map_err(|_| GraphError::Syntax {
                        line: line_no,
                        msg: format!("bad vertex count `{v}`"),
                    })?);
                }
                Some(_) => {
                    let parts: Vec<&str> = line.split_whitespace().collect();
                    let parse = |s: &str| {
                        s.parse::<usize>().map_err(|_| GraphError::Syntax {
                            line: line_no,
                            msg: format!("bad vertex `{s}`"),
                        })
                    };
                    if parts.len() != 2 {
                        return Err(GraphError::Syntax {
                            line: line_no,
                            msg: "expected `i j`".into(),
                        });
                    }
                    edges.push((parse(parts[0])?, parse(parts[1])?));
                }
            }
        }
        let n = n.ok_or(GraphError::Syntax {
            line: 1,
            msg: "missing `n=<int>` line".into(),
        })?;
        Graph::new(n, edges)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("n={}\n", self.n);
        for (i, j) in &self.edges {
            let _ = writeln!(s, "{i} {j}");
        }
        s
    }
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
