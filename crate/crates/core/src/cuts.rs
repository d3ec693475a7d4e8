//! Explicit cut families of `AQ_n` and their certification.

use serde::{Deserialize, Serialize};

use crate::connectivity::{ConnKind, Cut};
use crate::cube::{Dimension, EdgeKind, VertexId, MAX_DIM};
use crate::error::{AqError, Result};
use crate::graph::{Edge, Graph};
use crate::neighborhood::{edge_boundary, neighborhood_of_set, PathTriple};

/// A cut together with the component census of the graph after removal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutCertificate {
    pub kind: ConnKind,
    pub members: Cut,
    /// Extra level the certificate was checked against.
    pub h: usize,
    /// Orders of the components left after removal, ascending.
    pub component_sizes: Vec<usize>,
    pub disconnected: bool,
    /// Smallest component order; 0 when nothing is left.
    pub min_component: usize,
}

impl CutCertificate {
    /// Disconnected, and every component has more than `h` vertices.
    pub fn h_extra_valid(&self, h: usize) -> bool {
        self.disconnected && self.min_component > h
    }

    pub fn is_valid(&self) -> bool {
        self.h_extra_valid(self.h)
    }
}

/// Removes the cut from `g` and records the resulting components.
pub fn validate_cut(g: &Graph, cut: &Cut, h: usize) -> Result<CutCertificate> {
    let nv = g.vertex_count();
    let sizes = match cut {
        Cut::Vertex(members) => {
            let mut alive = vec![true; nv];
            for &v in members {
                if v as usize >= nv {
                    return Err(AqError::Argument(format!("vertex {v} is not in the graph")));
                }
                alive[v as usize] = false;
            }
            g.component_sizes(&alive, |_, _| true)
        }
        Cut::Edge(members) => {
            for e in members {
                if !g.has_edge(e.u, e.v) {
                    return Err(AqError::Argument(format!("edge {}-{} is not in the graph", e.u, e.v)));
                }
            }
            let mut removed = members.clone();
            removed.sort_unstable();
            g.component_sizes(&vec![true; nv], |u, v| removed.binary_search(&Edge::new(u, v)).is_err())
        }
    };
    let mut members = cut.clone();
    match &mut members {
        Cut::Vertex(v) => {
            v.sort_unstable();
            v.dedup();
        }
        Cut::Edge(e) => {
            e.sort_unstable();
            e.dedup();
        }
    }
    Ok(CutCertificate {
        kind: cut.kind(),
        members,
        h,
        disconnected: sizes.len() >= 2,
        min_component: sizes.first().copied().unwrap_or(0),
        component_sizes: sizes,
    })
}

fn require_min(what: &'static str, dim: Dimension, min: u32) -> Result<()> {
    if dim.get() < min {
        return Err(AqError::UnsupportedDimension { what, n: dim.get(), min, max: MAX_DIM });
    }
    Ok(())
}

fn require_vertex(dim: Dimension, x: VertexId) -> Result<()> {
    dim.vertex(x.0 as u64).map(|_| ())
}

/// The path `P = (X̄_i, X, X̄_{i+2})` and its neighborhood `S = N(P)`,
/// `|S| = 6n - 17`. Needs `n >= 5` and `2 <= i <= n - 3`.
pub fn kappa2_candidate_cut(dim: Dimension, x: VertexId, i: u32) -> Result<(PathTriple, Vec<VertexId>)> {
    require_min("2-extra vertex cut construction", dim, 5)?;
    require_vertex(dim, x)?;
    let n = dim.get();
    if !(2..=n - 3).contains(&i) {
        return Err(AqError::IndexOutOfRange { index: i, min: 2, max: n - 3 });
    }
    let path = PathTriple::new(dim, x.complement(i), x, x.complement(i + 2))?;
    let set = neighborhood_of_set(dim, &path.vertices())?;
    Ok((path, set))
}

/// The triangle `{X, X_1, X̄_2}` and its edge boundary, `|F| = 6n - 9`.
/// Needs `n >= 4`.
pub fn lambda2_candidate_cut(dim: Dimension, x: VertexId) -> Result<([VertexId; 3], Vec<Edge>)> {
    require_min("2-extra edge cut construction", dim, 4)?;
    require_vertex(dim, x)?;
    let triangle = [x, x.hyper(1), x.complement(2)];
    let boundary = edge_boundary(dim, &triangle)?;
    Ok((triangle, boundary))
}

/// `N({X, Y})` for a complement edge `Y = X̄_i`, `2 <= i <= n - 1`; such an
/// edge has four common neighbors, so `|N| = 4n - 8`.
pub fn super_vertex_cut(dim: Dimension, x: VertexId, kind: EdgeKind) -> Result<Vec<VertexId>> {
    require_vertex(dim, x)?;
    dim.check_kind(kind)?;
    match kind {
        EdgeKind::Complement(i) if i < dim.get() => {
            neighborhood_of_set(dim, &[x, kind.apply(x)])
        }
        other => Err(AqError::Argument(format!(
            "the super vertex cut needs a complement edge of dimension 2..={}, got {other}",
            dim.get() - 1
        ))),
    }
}

/// `E({X, Y})` for any edge `XY`, `|E| = 4n - 4`.
pub fn super_edge_cut(dim: Dimension, x: VertexId, kind: EdgeKind) -> Result<Vec<Edge>> {
    let y = dim.endpoint(x, kind)?;
    edge_boundary(dim, &[x, y])
}
