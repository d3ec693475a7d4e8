//! Common neighbors, set neighborhoods and the classification of 2-paths.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cube::{Dimension, EdgeKind, VertexId};
use crate::error::{AqError, Result};
use crate::graph::Edge;

/// Smallest dimension for which the 2-path size tables are stated.
pub const PATH2_MIN_DIM: u32 = 5;

fn check_all(dim: Dimension, xs: &[VertexId]) -> Result<()> {
    match xs.iter().find(|x| !dim.contains(**x)) {
        Some(x) => Err(AqError::VertexOutOfRange {
            vertex: x.0 as u64,
            n: dim.get(),
        }),
        None => Ok(()),
    }
}

pub(crate) fn sorted_neighbors(dim: Dimension, x: VertexId) -> Vec<VertexId> {
    let mut v: Vec<VertexId> = dim.incident(x).map(|(_, y)| y).collect();
    v.sort_unstable();
    v
}

fn intersect_sorted(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// `N(X) ∩ N(Y)` by direct intersection, sorted.
pub fn common_neighbors(dim: Dimension, x: VertexId, y: VertexId) -> Result<Vec<VertexId>> {
    check_all(dim, &[x, y])?;
    if x == y {
        return Err(AqError::Argument("common neighbors of a vertex with itself".into()));
    }
    Ok(intersect_sorted(&sorted_neighbors(dim, x), &sorted_neighbors(dim, y)))
}

/// Closed-form common neighbors of `X` and the far end of the edge `kind`:
///
/// | edge              | common neighbors                 |
/// |-------------------|----------------------------------|
/// | `X_1`             | `X_2, X̄_2`                       |
/// | `X_i`, i > 1      | `X̄_i, X̄_{i-1}`                   |
/// | `X̄_i`, 2<=i<=n-1  | `X_i, X_{i+1}, X̄_{i-1}, X̄_{i+1}` |
/// | `X̄_n`             | `X̄_{n-1}, X_n`                   |
///
/// Requires `n >= 2`. The result is sorted.
pub fn common_neighbors_formula(dim: Dimension, x: VertexId, kind: EdgeKind) -> Result<Vec<VertexId>> {
    check_all(dim, &[x])?;
    dim.check_kind(kind)?;
    let n = dim.get();
    if n < 2 {
        return Err(AqError::UnsupportedDimension {
            what: "common-neighbor formula",
            n,
            min: 2,
            max: crate::cube::MAX_DIM,
        });
    }
    let mut out = match kind {
        EdgeKind::Hypercube(1) => vec![x.hyper(2), x.complement(2)],
        EdgeKind::Hypercube(i) => vec![x.complement(i), x.complement(i - 1)],
        EdgeKind::Complement(i) if i < n => vec![
            x.hyper(i),
            x.hyper(i + 1),
            x.complement(i - 1),
            x.complement(i + 1),
        ],
        EdgeKind::Complement(_) => vec![x.complement(n - 1), x.hyper(n)],
    };
    out.sort_unstable();
    Ok(out)
}

pub(crate) fn set_neighborhood_raw(dim: Dimension, set: &[VertexId]) -> Vec<VertexId> {
    let mut inside = set.to_vec();
    inside.sort_unstable();
    inside.dedup();
    let mut out: Vec<VertexId> = inside
        .iter()
        .flat_map(|&x| dim.incident(x).map(|(_, y)| y))
        .filter(|y| inside.binary_search(y).is_err())
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// `N(T)`: every vertex adjacent to some member of `T` but not in `T`, sorted.
pub fn neighborhood_of_set(dim: Dimension, set: &[VertexId]) -> Result<Vec<VertexId>> {
    check_all(dim, set)?;
    Ok(set_neighborhood_raw(dim, set))
}

/// `E(T)`: edges with exactly one end in `T`, sorted.
pub fn edge_boundary(dim: Dimension, set: &[VertexId]) -> Result<Vec<Edge>> {
    check_all(dim, set)?;
    let mut inside = set.to_vec();
    inside.sort_unstable();
    inside.dedup();
    let mut out: Vec<Edge> = inside
        .iter()
        .flat_map(|&x| dim.incident(x).map(move |(_, y)| (x, y)))
        .filter(|(_, y)| inside.binary_search(y).is_err())
        .map(|(x, y)| Edge::new(x.0, y.0))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// A 2-path `(Y, X, Z)` centred at `X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathTriple {
    pub center: VertexId,
    pub ends: (VertexId, VertexId),
}

impl PathTriple {
    pub fn new(dim: Dimension, y: VertexId, x: VertexId, z: VertexId) -> Result<Self> {
        check_all(dim, &[x, y, z])?;
        if y == z {
            return Err(AqError::Argument("path ends coincide".into()));
        }
        if dim.classify_edge(x, y).is_none() || dim.classify_edge(x, z).is_none() {
            return Err(AqError::Argument(format!(
                "({y}, {x}, {z}) is not a path of AQ_{dim}"
            )));
        }
        Ok(PathTriple { center: x, ends: (y, z) })
    }

    pub fn vertices(&self) -> [VertexId; 3] {
        [self.ends.0, self.center, self.ends.1]
    }
}

/// Which edge kinds the two ends of a 2-path use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PathFamily {
    /// Both ends hypercube neighbors of the center.
    HH,
    /// Both ends complement neighbors.
    CC,
    /// One of each; the hypercube end is taken as `Y`.
    HC,
}

impl fmt::Display for PathFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A row of the neighborhood-size table: the condition on `(i, j)` and the
/// constant `c` in `|N(P)| = 6n - c`.
struct Row {
    label: &'static str,
    offset: usize,
}

const HH_ROWS: [Row; 3] = [
    Row { label: "i=1,j=2|3", offset: 13 },
    Row { label: "i>1,j=i+1", offset: 13 },
    Row { label: "otherwise", offset: 12 },
];

const CC_ROWS: [Row; 6] = [
    Row { label: "j=i+1,j<n", offset: 15 },
    Row { label: "j=i+1,j=n", offset: 13 },
    Row { label: "j=i+2,j<n", offset: 17 },
    Row { label: "j=i+2,j=n", offset: 15 },
    Row { label: "j>=i+3,j<n", offset: 16 },
    Row { label: "j>=i+3,j=n", offset: 14 },
];

const HC_ROWS: [Row; 13] = [
    Row { label: "i=1,j=2", offset: 13 },
    Row { label: "i=1,j=3", offset: 15 },
    Row { label: "i=1,4<=j<n", offset: 14 },
    Row { label: "i=1,j=n", offset: 12 },
    Row { label: "i=j=2", offset: 13 },
    Row { label: "3<=i=j<=n-1", offset: 15 },
    Row { label: "i=j=n", offset: 13 },
    Row { label: "j=i-1,3<=i<=n-1|j=i+1,2<=i<=n-2", offset: 15 },
    Row { label: "j=i-1,i=n", offset: 13 },
    Row { label: "j=n,i=n-1", offset: 13 },
    Row { label: "j=i-2,i>=4", offset: 15 },
    Row { label: "j<=i-3,i>=5|j>=i+2,j<n", offset: 14 },
    Row { label: "j>=i+2,j=n", offset: 12 },
];

fn rows(family: PathFamily) -> &'static [Row] {
    match family {
        PathFamily::HH => &HH_ROWS,
        PathFamily::CC => &CC_ROWS,
        PathFamily::HC => &HC_ROWS,
    }
}

/// Family, matched table row and the edge dimensions `i` (of `Y`) and `j`
/// (of `Z`) after canonical ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathClass {
    pub family: PathFamily,
    pub row: usize,
    pub i: u32,
    pub j: u32,
}

impl PathClass {
    pub fn row_label(&self) -> &'static str {
        rows(self.family)[self.row].label
    }

    /// Aggregation key, e.g. `CC/j=i+2,j<n`.
    pub fn key(&self) -> String {
        format!("{}/{}", self.family, self.row_label())
    }

    /// Every `(family, row)` key in table order.
    pub fn all_keys() -> Vec<String> {
        [PathFamily::HH, PathFamily::CC, PathFamily::HC]
            .iter()
            .flat_map(|&f| rows(f).iter().map(move |r| format!("{f}/{}", r.label)))
            .collect()
    }

    /// The `c` with `|N(P)| = 6n - c` for the table row keyed by `key`.
    pub fn offset_for_key(key: &str) -> Option<usize> {
        let (fam, label) = key.split_once('/')?;
        let family = match fam {
            "HH" => PathFamily::HH,
            "CC" => PathFamily::CC,
            "HC" => PathFamily::HC,
            _ => return None,
        };
        rows(family).iter().find(|r| r.label == label).map(|r| r.offset)
    }
}

fn first_match(conds: &[bool]) -> usize {
    conds
        .iter()
        .position(|&c| c)
        .expect("row conditions cover every (i, j)")
}

fn classify_ends(n: u32, ky: EdgeKind, kz: EdgeKind) -> PathClass {
    use EdgeKind::{Complement as C, Hypercube as H};
    match (ky, kz) {
        (H(a), H(b)) => {
            let (i, j) = (a.min(b), a.max(b));
            let row = first_match(&[i == 1 && (j == 2 || j == 3), i > 1 && j == i + 1, true]);
            PathClass { family: PathFamily::HH, row, i, j }
        }
        (C(a), C(b)) => {
            let (i, j) = (a.min(b), a.max(b));
            let row = first_match(&[
                j == i + 1 && j < n,
                j == i + 1 && j == n,
                j == i + 2 && j < n,
                j == i + 2 && j == n,
                j >= i + 3 && j < n,
                j >= i + 3 && j == n,
            ]);
            PathClass { family: PathFamily::CC, row, i, j }
        }
        (C(_), H(_)) => classify_ends(n, kz, ky),
        (H(i), C(j)) => {
            let row = first_match(&[
                i == 1 && j == 2,
                i == 1 && j == 3,
                i == 1 && 4 <= j && j < n,
                i == 1 && j == n,
                i == 2 && j == 2,
                3 <= i && i == j && i < n,
                i == n && j == n,
                (j + 1 == i && 3 <= i && i < n) || (j == i + 1 && 2 <= i && i + 2 <= n),
                j + 1 == i && i == n,
                j == n && i + 1 == n,
                j + 2 == i && i >= 4,
                (j + 3 <= i && i >= 5) || (j >= i + 2 && j < n),
                j >= i + 2 && j == n,
            ]);
            PathClass { family: PathFamily::HC, row, i, j }
        }
    }
}

fn require_path2_dim(dim: Dimension) -> Result<()> {
    if dim.get() < PATH2_MIN_DIM {
        return Err(AqError::UnsupportedDimension {
            what: "2-path size table",
            n: dim.get(),
            min: PATH2_MIN_DIM,
            max: crate::cube::MAX_DIM,
        });
    }
    Ok(())
}

/// Classifies a 2-path. Rows are tried top to bottom, first match wins.
pub fn path2_class(dim: Dimension, path: &PathTriple) -> Result<PathClass> {
    require_path2_dim(dim)?;
    let x = path.center;
    let edge = |y| {
        dim.classify_edge(x, y)
            .ok_or_else(|| AqError::Argument(format!("{y} is not adjacent to {x}")))
    };
    let (ky, kz) = (edge(path.ends.0)?, edge(path.ends.1)?);
    if path.ends.0 == path.ends.1 {
        return Err(AqError::Argument("path ends coincide".into()));
    }
    Ok(classify_ends(dim.get(), ky, kz))
}

pub(crate) fn path2_class_unchecked(n: u32, ky: EdgeKind, kz: EdgeKind) -> PathClass {
    classify_ends(n, ky, kz)
}

/// The tabulated `|N(P)|` for a class at dimension `n`.
pub fn expected_size(class: &PathClass, n: u32) -> Result<usize> {
    require_path2_dim(Dimension::new(n)?)?;
    Ok(6 * n as usize - rows(class.family)[class.row].offset)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: u32) -> Dimension {
        Dimension::new(n).unwrap()
    }
    fn v(bits: &str) -> VertexId {
        VertexId::from_bits(bits).unwrap()
    }

    #[test]
    fn common_neighbors_examples() {
        let q = d(3);
        assert_eq!(common_neighbors(q, v("000"), v("001")).unwrap(), vec![v("010"), v("011")]);
        assert_eq!(common_neighbors(q, v("000"), v("111")).unwrap(), vec![v("011"), v("100")]);
        assert!(common_neighbors(q, v("000"), v("000")).is_err());
        for x in q.vertices() {
            for i in 1..=3 {
                assert_eq!(common_neighbors(q, x, x.hyper(i)).unwrap().len(), 2);
            }
        }
    }

    #[test]
    fn formula_examples() {
        let got = common_neighbors_formula(d(4), v("0000"), EdgeKind::Complement(2)).unwrap();
        let mut want = ["0010", "0100", "0001", "0111"].map(v).to_vec();
        want.sort();
        assert_eq!(got, want);
        assert_eq!(
            common_neighbors_formula(d(3), v("000"), EdgeKind::Hypercube(1)).unwrap(),
            vec![v("010"), v("011")]
        );
        assert!(common_neighbors_formula(d(3), v("000"), EdgeKind::Complement(1)).is_err());
        assert!(common_neighbors_formula(d(3), v("000"), EdgeKind::Hypercube(4)).is_err());
    }

    #[test]
    fn set_neighborhoods() {
        let q = d(3);
        assert_eq!(
            neighborhood_of_set(q, &[v("000")]).unwrap(),
            sorted_neighbors(q, v("000"))
        );
        let all: Vec<VertexId> = q.vertices().collect();
        assert!(neighborhood_of_set(q, &all).unwrap().is_empty());
        assert_eq!(
            neighborhood_of_set(q, &[v("000"), v("001")]).unwrap(),
            ["010", "011", "100", "101", "110", "111"].map(v).to_vec()
        );
        assert!(neighborhood_of_set(q, &[VertexId(9)]).is_err());
    }

    #[test]
    fn edge_boundaries() {
        let q = d(4);
        assert_eq!(edge_boundary(q, &[v("0110")]).unwrap().len(), 7);
        assert_eq!(edge_boundary(q, &[v("0000"), v("0001")]).unwrap().len(), 12);
        assert_eq!(edge_boundary(q, &[v("0000"), v("0001"), v("0011")]).unwrap().len(), 15);
    }

    #[test]
    fn path_class_examples() {
        let x = VertexId(0);
        let p = PathTriple::new(d(5), x.complement(2), x, x.complement(4)).unwrap();
        let c = path2_class(d(5), &p).unwrap();
        assert_eq!(c.key(), "CC/j=i+2,j<n");
        assert_eq!(expected_size(&c, 5).unwrap(), 13);

        let p = PathTriple::new(d(6), x.hyper(1), x, x.hyper(2)).unwrap();
        let c = path2_class(d(6), &p).unwrap();
        assert_eq!(c.key(), "HH/i=1,j=2|3");
        assert_eq!(expected_size(&c, 6).unwrap(), 23);

        let p = PathTriple::new(d(6), x.hyper(1), x, x.complement(6)).unwrap();
        let c = path2_class(d(6), &p).unwrap();
        assert_eq!(c.key(), "HC/i=1,j=n");
        assert_eq!(expected_size(&c, 6).unwrap(), 24);
    }

    #[test]
    fn class_is_independent_of_end_order() {
        let x = VertexId(5);
        let p = PathTriple::new(d(7), x.complement(6), x, x.hyper(3)).unwrap();
        let q = PathTriple::new(d(7), x.hyper(3), x, x.complement(6)).unwrap();
        let (a, b) = (path2_class(d(7), &p).unwrap(), path2_class(d(7), &q).unwrap());
        assert_eq!(a, b);
        assert_eq!((a.family, a.i, a.j), (PathFamily::HC, 3, 6));
    }

    #[test]
    fn overlapping_rows_take_the_first() {
        // i=1, j=2 also satisfies j=i+1 but is listed first
        let c = path2_class_unchecked(8, EdgeKind::Hypercube(1), EdgeKind::Complement(2));
        assert_eq!(c.row, 0);
    }

    #[test]
    fn path_tables_refuse_small_n() {
        let x = VertexId(0);
        let p = PathTriple::new(d(4), x.hyper(1), x, x.hyper(2)).unwrap();
        assert!(matches!(
            path2_class(d(4), &p),
            Err(AqError::UnsupportedDimension { n: 4, .. })
        ));
        assert!(PathTriple::new(d(4), x.hyper(1), x, x.hyper(1)).is_err());
        assert!(PathTriple::new(d(4), VertexId(6), x, x.hyper(1)).is_err());
    }

    #[test]
    fn table_keys_resolve() {
        let keys = PathClass::all_keys();
        assert_eq!(keys.len(), 22);
        assert_eq!(PathClass::offset_for_key("CC/j=i+2,j<n"), Some(17));
        assert_eq!(PathClass::offset_for_key("XX/none"), None);
    }
}
