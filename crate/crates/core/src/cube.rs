//! Vertex labels, neighbor generation and construction of the augmented cube.
//!
//! A label `X = x_n ... x_1` is packed into a `u32` with `x_i` stored at bit
//! position `i - 1`. Under that convention the hypercube neighbor `X_i` is a
//! single-bit flip and the complement neighbor `X̄_i` is an xor with the mask
//! `2^i - 1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{AqError, Result};
use crate::graph::{Edge, Graph};

/// Largest dimension accepted for implicit (formula-driven) work.
pub const MAX_DIM: u32 = 30;
/// Largest dimension that may be materialized as an adjacency structure.
pub const MAX_MATERIALIZED_DIM: u32 = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Dimension(u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

/// How two adjacent labels are related.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeKind {
    /// `Y = X_i`, 1 <= i <= n.
    Hypercube(u32),
    /// `Y = X̄_i`, 2 <= i <= n.
    Complement(u32),
}

/// The two recursive halves `L` (leading bit 0) and `R` (leading bit 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Half {
    L,
    R,
}

impl VertexId {
    /// `X_i`: flips bit `i`. No range checks.
    #[inline]
    pub fn hyper(self, i: u32) -> VertexId {
        VertexId(self.0 ^ (1 << (i - 1)))
    }

    /// `X̄_i`: flips bits `i, i-1, ..., 1`. No range checks.
    #[inline]
    pub fn complement(self, i: u32) -> VertexId {
        VertexId(self.0 ^ low_mask(i))
    }

    /// The label as an `n`-character binary string, `x_n` first.
    pub fn to_bits(self, n: u32) -> String {
        format!("{:0width$b}", self.0, width = n as usize)
    }

    /// Parses a binary string written `x_n ... x_1`.
    pub fn from_bits(bits: &str) -> Result<VertexId> {
        if bits.is_empty() || bits.len() > MAX_DIM as usize {
            return Err(AqError::Argument(format!("bad label {bits:?}")));
        }
        u32::from_str_radix(bits, 2)
            .map(VertexId)
            .map_err(|_| AqError::Argument(format!("bad label {bits:?}")))
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl EdgeKind {
    pub fn index(self) -> u32 {
        match self {
            EdgeKind::Hypercube(i) | EdgeKind::Complement(i) => i,
        }
    }

    /// The neighbor reached from `x` along this kind of edge. No range checks.
    #[inline]
    pub fn apply(self, x: VertexId) -> VertexId {
        match self {
            EdgeKind::Hypercube(i) => x.hyper(i),
            EdgeKind::Complement(i) => x.complement(i),
        }
    }
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeKind::Hypercube(i) => write!(f, "H{i}"),
            EdgeKind::Complement(i) => write!(f, "C{i}"),
        }
    }
}

impl std::str::FromStr for EdgeKind {
    type Err = AqError;

    /// Parses `H<i>` or `C<i>` (case-insensitive); dimension bounds are
    /// checked later against a concrete cube.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || AqError::Argument(format!("bad edge kind {s:?}, expected H<i> or C<i>"));
        let mut chars = s.chars();
        let tag = chars.next().ok_or_else(bad)?;
        let i: u32 = chars.as_str().parse().map_err(|_| bad())?;
        match tag {
            'H' | 'h' => Ok(EdgeKind::Hypercube(i)),
            'C' | 'c' => Ok(EdgeKind::Complement(i)),
            _ => Err(bad()),
        }
    }
}

#[inline]
pub(crate) fn low_mask(i: u32) -> u32 {
    ((1u64 << i) - 1) as u32
}

impl Dimension {
    pub fn new(n: u32) -> Result<Self> {
        if (1..=MAX_DIM).contains(&n) {
            Ok(Dimension(n))
        } else {
            Err(AqError::InvalidDimension(n))
        }
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    pub fn vertex_count(self) -> usize {
        1usize << self.0
    }

    pub fn degree(self) -> usize {
        if self.0 == 1 {
            1
        } else {
            2 * self.0 as usize - 1
        }
    }

    pub fn edge_count(self) -> usize {
        if self.0 == 1 {
            1
        } else {
            self.degree() << (self.0 - 1)
        }
    }

    /// `AQ_1 = K_2` and `AQ_2 = K_4`; connectivity routines treat these
    /// through the complete-graph convention.
    pub fn is_complete(self) -> bool {
        self.0 <= 2
    }

    pub fn contains(self, x: VertexId) -> bool {
        (x.0 as u64) < (1u64 << self.0)
    }

    pub fn vertex(self, value: u64) -> Result<VertexId> {
        if value < (1u64 << self.0) {
            Ok(VertexId(value as u32))
        } else {
            Err(AqError::VertexOutOfRange {
                vertex: value,
                n: self.0,
            })
        }
    }

    pub fn vertices(self) -> impl Iterator<Item = VertexId> {
        (0..(1u64 << self.0)).map(|v| VertexId(v as u32))
    }

    fn check_vertex(self, x: VertexId) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(AqError::VertexOutOfRange {
                vertex: x.0 as u64,
                n: self.0,
            })
        }
    }

    fn check_index(self, i: u32, min: u32) -> Result<()> {
        if (min..=self.0).contains(&i) {
            Ok(())
        } else {
            Err(AqError::IndexOutOfRange {
                index: i,
                min,
                max: self.0,
            })
        }
    }

    pub fn hyper_neighbor(self, x: VertexId, i: u32) -> Result<VertexId> {
        self.check_vertex(x)?;
        self.check_index(i, 1)?;
        Ok(x.hyper(i))
    }

    /// Defined for `i = 1` as well, where it coincides with `X_1`.
    pub fn comp_neighbor(self, x: VertexId, i: u32) -> Result<VertexId> {
        self.check_vertex(x)?;
        self.check_index(i, 1)?;
        Ok(x.complement(i))
    }

    /// The edge kinds present at every vertex, in generation order
    /// `H1..Hn, C2..Cn`.
    pub fn edge_kinds(self) -> impl Iterator<Item = EdgeKind> {
        let n = self.0;
        (1..=n)
            .map(EdgeKind::Hypercube)
            .chain((2..=n).map(EdgeKind::Complement))
    }

    /// Whether `kind` names an edge of this cube.
    pub fn check_kind(self, kind: EdgeKind) -> Result<()> {
        match kind {
            EdgeKind::Hypercube(i) => self.check_index(i, 1),
            EdgeKind::Complement(i) => self.check_index(i, 2),
        }
    }

    pub fn endpoint(self, x: VertexId, kind: EdgeKind) -> Result<VertexId> {
        self.check_vertex(x)?;
        self.check_kind(kind)?;
        Ok(kind.apply(x))
    }

    /// Pairs `(kind, neighbor)` for all edges at `x`, in generation order.
    pub fn incident(self, x: VertexId) -> impl Iterator<Item = (EdgeKind, VertexId)> {
        self.edge_kinds().map(move |k| (k, k.apply(x)))
    }

    /// `N(X)`, in generation order `X_1..X_n, X̄_2..X̄_n`.
    pub fn neighbors(self, x: VertexId) -> Result<Vec<VertexId>> {
        self.check_vertex(x)?;
        Ok(self.incident(x).map(|(_, y)| y).collect())
    }

    /// Kind of the edge `XY`, or `None` when the labels are not adjacent.
    /// A difference in bit 1 alone is always reported as `Hypercube(1)`.
    pub fn classify_edge(self, x: VertexId, y: VertexId) -> Option<EdgeKind> {
        if !self.contains(x) || !self.contains(y) || x == y {
            return None;
        }
        let d = x.0 ^ y.0;
        if d.is_power_of_two() {
            return Some(EdgeKind::Hypercube(d.trailing_zeros() + 1));
        }
        let i = d.trailing_ones();
        if d == low_mask(i) && i >= 2 {
            return Some(EdgeKind::Complement(i));
        }
        None
    }

    pub fn half(self, x: VertexId) -> Result<Half> {
        self.require_halves()?;
        self.check_vertex(x)?;
        Ok(if x.0 >> (self.0 - 1) & 1 == 0 {
            Half::L
        } else {
            Half::R
        })
    }

    /// `(X_n, X̄_n)`, the two neighbors of `x` in the opposite half.
    pub fn crossed_neighbors(self, x: VertexId) -> Result<(VertexId, VertexId)> {
        self.require_halves()?;
        self.check_vertex(x)?;
        Ok((x.hyper(self.0), x.complement(self.0)))
    }

    fn require_halves(self) -> Result<()> {
        if self.0 < 2 {
            return Err(AqError::UnsupportedDimension {
                what: "halves decomposition",
                n: self.0,
                min: 2,
                max: MAX_DIM,
            });
        }
        Ok(())
    }

    fn require_materializable(self) -> Result<()> {
        if self.0 > MAX_MATERIALIZED_DIM {
            return Err(AqError::Capacity(format!(
                "AQ_{} has too many vertices to materialize (limit n = {MAX_MATERIALIZED_DIM})",
                self.0
            )));
        }
        Ok(())
    }

    /// Edge set from the adjacency rule, sorted.
    pub fn direct_edges(self) -> Result<Vec<Edge>> {
        self.require_materializable()?;
        let mut edges = Vec::with_capacity(self.edge_count());
        for x in self.vertices() {
            for (_, y) in self.incident(x) {
                if x.0 < y.0 {
                    edges.push(Edge::new(x.0, y.0));
                }
            }
        }
        edges.sort_unstable();
        Ok(edges)
    }

    /// Edge set from the recursive definition: two copies of `AQ_{k-1}`
    /// joined by the crossed edges `x ~ 1x` and `x ~ 1x̄`, sorted.
    pub fn recursive_edges(self) -> Result<Vec<Edge>> {
        self.require_materializable()?;
        let mut edges = vec![Edge::new(0, 1)];
        for k in 2..=self.0 {
            let lead = 1u32 << (k - 1);
            let lower = low_mask(k - 1);
            let mut next = Vec::with_capacity(edges.len() * 2 + (2usize << (k - 1)));
            for e in &edges {
                next.push(*e);
                next.push(Edge::new(e.u | lead, e.v | lead));
            }
            for x in 0..lead {
                next.push(Edge::new(x, x | lead));
                next.push(Edge::new(x, (!x & lower) | lead));
            }
            edges = next;
        }
        edges.sort_unstable();
        Ok(edges)
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `AQ_n`, either implicit (labels and formulas only) or materialized.
#[derive(Debug, Clone)]
pub struct AugCube {
    dim: Dimension,
    graph: Option<Graph>,
}

impl AugCube {
    pub fn implicit(dim: Dimension) -> Self {
        AugCube { dim, graph: None }
    }

    /// Materializes the sorted adjacency lists of `AQ_n`, `n <= 20`.
    pub fn build(dim: Dimension) -> Result<Self> {
        dim.require_materializable()?;
        let lists = dim
            .vertices()
            .map(|x| dim.incident(x).map(|(_, y)| y.0).collect())
            .collect();
        Ok(AugCube {
            dim,
            graph: Some(Graph::from_adjacency(lists)),
        })
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn graph(&self) -> Option<&Graph> {
        self.graph.as_ref()
    }

    pub fn is_materialized(&self) -> bool {
        self.graph.is_some()
    }

    /// The adjacency structure, or an argument error for an implicit cube.
    pub fn require_graph(&self) -> Result<&Graph> {
        self.graph
            .as_ref()
            .ok_or_else(|| AqError::Argument(format!("AQ_{} is not materialized", self.dim)))
    }
}
