//! Compressed adjacency storage shared by the materialized cube, the file
//! importers and the connectivity engines.

use serde::{Deserialize, Serialize};

use crate::error::{AqError, Result};

/// An undirected edge, normalized so that `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub u: u32,
    pub v: u32,
}

impl Edge {
    /// Builds the normalized edge between `a` and `b`.
    ///
    /// Panics on a self-loop; callers are expected to have checked `a != b`.
    pub fn new(a: u32, b: u32) -> Self {
        assert_ne!(a, b, "self-loop {a}-{a}");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }
}

/// Simple undirected graph in CSR form with sorted neighbor lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl Graph {
    /// Builds a graph from an edge list. Rejects self-loops, duplicate edges
    /// and endpoints outside `0..vertex_count`.
    pub fn from_edges(vertex_count: usize, edges: &[Edge]) -> Result<Self> {
        let mut degree = vec![0usize; vertex_count];
        for e in edges {
            if e.u == e.v {
                return Err(AqError::Argument(format!("self-loop at vertex {}", e.u)));
            }
            for end in [e.u, e.v] {
                if end as usize >= vertex_count {
                    return Err(AqError::Argument(format!(
                        "edge endpoint {end} outside 0..{vertex_count}"
                    )));
                }
            }
            degree[e.u as usize] += 1;
            degree[e.v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(vertex_count + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..vertex_count].to_vec();
        let mut targets = vec![0u32; offsets[vertex_count]];
        for e in edges {
            targets[fill[e.u as usize]] = e.v;
            fill[e.u as usize] += 1;
            targets[fill[e.v as usize]] = e.u;
            fill[e.v as usize] += 1;
        }
        for v in 0..vertex_count {
            let list = &mut targets[offsets[v]..offsets[v + 1]];
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(AqError::Argument(format!(
                    "duplicate edge {}-{}",
                    v.min(w[0] as usize),
                    v.max(w[0] as usize)
                )));
            }
        }
        Ok(Graph { offsets, targets })
    }

    /// Builds a graph from per-vertex neighbor lists that are already
    /// symmetric, irreflexive and duplicate-free. Lists are sorted here.
    pub(crate) fn from_adjacency(lists: Vec<Vec<u32>>) -> Self {
        let mut offsets = Vec::with_capacity(lists.len() + 1);
        offsets.push(0);
        let total = lists.iter().map(Vec::len).sum();
        let mut targets = Vec::with_capacity(total);
        for mut list in lists {
            list.sort_unstable();
            targets.extend_from_slice(&list);
            offsets.push(targets.len());
        }
        Graph { offsets, targets }
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: u32) -> &[u32] {
        let v = v as usize;
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: u32) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn min_degree(&self) -> usize {
        (0..self.vertex_count() as u32)
            .map(|v| self.degree(v))
            .min()
            .unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count() as u32)
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        (u as usize) < self.vertex_count() && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// All edges, each once, in ascending `(u, v)` order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count() as u32 {
            for &v in self.neighbors(u) {
                if u < v {
                    out.push(Edge { u, v });
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        (0..n as u32).all(|v| self.degree(v) == n - 1)
    }

    pub fn is_connected(&self) -> bool {
        let alive = vec![true; self.vertex_count()];
        self.component_sizes(&alive, |_, _| true).len() <= 1
    }

    /// Orders of the connected components of the subgraph induced by the
    /// vertices with `alive[v]`, using only edges accepted by `keep_edge`.
    /// Sizes are returned in ascending order.
    pub fn component_sizes<F>(&self, alive: &[bool], keep_edge: F) -> Vec<usize>
    where
        F: Fn(u32, u32) -> bool,
    {
        let n = self.vertex_count();
        let mut dsu = DisjointSet::new(n);
        for u in 0..n as u32 {
            if !alive[u as usize] {
                continue;
            }
            for &v in self.neighbors(u) {
                if u < v && alive[v as usize] && keep_edge(u, v) {
                    dsu.union(u as usize, v as usize);
                }
            }
        }
        let mut sizes = Vec::new();
        for (v, &on) in alive.iter().enumerate().take(n) {
            if on && dsu.find(v) == v {
                sizes.push(dsu.size_of(v));
            }
        }
        sizes.sort_unstable();
        sizes
    }
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub struct DisjointSet {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSet {
    pub fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }

    /// Size of the set containing `x`.
    pub fn size_of(&mut self, x: usize) -> usize {
        let r = self.find(x);
        self.size[r]
    }
}
