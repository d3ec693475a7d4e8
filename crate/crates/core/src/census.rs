//! Exhaustive verifiers for the neighborhood facts of `AQ_n`.
//!
//! Each verifier scans every instance (edge, vertex pair, 2-path, or 2-path
//! plus outside neighbor) of one cube, tallies the observed sizes per class
//! and collects counterexamples. Work is split by center vertex and the
//! partial reports merge associatively.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::cube::{Dimension, EdgeKind, VertexId};
use crate::error::{AqError, Result};
use crate::exec::{fold_reduce, Exec};
use crate::neighborhood::{
    common_neighbors_formula, path2_class_unchecked, sorted_neighbors, PathClass, PathFamily,
};

/// Counterexamples kept per report; `violation_count` keeps the full tally.
pub const MAX_WITNESSES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassTally {
    pub count: u64,
    pub min: usize,
    pub max: usize,
    /// Tabulated size, when the class has one.
    pub expected: Option<usize>,
}

impl ClassTally {
    fn single(size: usize, expected: Option<usize>) -> Self {
        ClassTally { count: 1, min: size, max: size, expected }
    }

    fn absorb(&mut self, other: &ClassTally) {
        self.count += other.count;
        self.min = self.min.min(other.min);
        self.max = self.max.max(other.max);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub reason: String,
    /// Vertex labels of the offending instance, center first where applicable.
    pub witness: Vec<u32>,
    pub class: Option<String>,
    pub observed: usize,
    pub expected: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub check: String,
    pub n: u32,
    pub total: u64,
    pub classes: BTreeMap<String, ClassTally>,
    pub min_observed: Option<usize>,
    pub max_observed: Option<usize>,
    /// Minimum over instances with an end at `X̄_n` (2-path checks only).
    pub refined_min: Option<usize>,
    /// Largest `|N(X) ∩ N(Y) ∩ N(Z)|` seen (2-path census only).
    pub triple_max: Option<usize>,
    pub violation_count: u64,
    pub violations: Vec<Violation>,
    #[serde(skip)]
    pub elapsed: Duration,
}

fn opt_min(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn opt_max(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.max(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl CensusReport {
    pub fn empty(check: &str, n: u32) -> Self {
        CensusReport {
            check: check.to_string(),
            n,
            total: 0,
            classes: BTreeMap::new(),
            min_observed: None,
            max_observed: None,
            refined_min: None,
            triple_max: None,
            violation_count: 0,
            violations: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn pass(&self) -> bool {
        self.violation_count == 0
    }

    /// Records one instance of `class` with observed size `size`.
    pub fn record(&mut self, class: &str, size: usize, expected: Option<usize>) {
        self.total += 1;
        self.min_observed = opt_min(self.min_observed, Some(size));
        self.max_observed = opt_max(self.max_observed, Some(size));
        match self.classes.get_mut(class) {
            Some(t) => t.absorb(&ClassTally::single(size, expected)),
            None => {
                self.classes
                    .insert(class.to_string(), ClassTally::single(size, expected));
            }
        }
    }

    pub fn violate(&mut self, v: Violation) {
        self.violation_count += 1;
        if self.violations.len() < MAX_WITNESSES {
            self.violations.push(v);
        }
    }

    /// Associative merge of two partial reports of the same check.
    pub fn merge(mut self, other: CensusReport) -> CensusReport {
        self.total += other.total;
        for (k, t) in &other.classes {
            match self.classes.get_mut(k) {
                Some(mine) => mine.absorb(t),
                None => {
                    self.classes.insert(k.clone(), t.clone());
                }
            }
        }
        self.min_observed = opt_min(self.min_observed, other.min_observed);
        self.max_observed = opt_max(self.max_observed, other.max_observed);
        self.refined_min = opt_min(self.refined_min, other.refined_min);
        self.triple_max = opt_max(self.triple_max, other.triple_max);
        self.violation_count += other.violation_count;
        let room = MAX_WITNESSES.saturating_sub(self.violations.len());
        self.violations.extend(other.violations.into_iter().take(room));
        self.elapsed = self.elapsed.max(other.elapsed);
        self
    }
}

fn require_range(what: &'static str, n: u32, min: u32, max: u32) -> Result<Dimension> {
    if n < min {
        return Err(AqError::UnsupportedDimension { what, n, min, max });
    }
    if n > max {
        return Err(AqError::Capacity(format!(
            "{what} is limited to n <= {max} (exhaustive budget), got n = {n}"
        )));
    }
    Dimension::new(n)
}

fn run_by_center<F>(check: &str, dim: Dimension, exec: Exec, per_center: F) -> CensusReport
where
    F: Fn(&mut CensusReport, VertexId) + Sync + Send,
{
    let start = Instant::now();
    let n = dim.get();
    let mut report = fold_reduce(
        exec,
        dim.vertex_count(),
        || CensusReport::empty(check, n),
        |mut acc, x| {
            per_center(&mut acc, VertexId(x as u32));
            acc
        },
        CensusReport::merge,
    );
    report.elapsed = start.elapsed();
    report
}

fn intersect_count(a: &[VertexId], b: &[VertexId]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

/// Adjacent vertices have two or four common neighbors, and the closed-form
/// sets agree with direct intersection at both ends of every edge.
/// `3 <= n <= 10`.
pub fn verify_adjacent_common(n: u32, exec: Exec) -> Result<CensusReport> {
    let dim = require_range("adjacent common-neighbor check", n, 3, 10)?;
    Ok(run_by_center("adjacent-common", dim, exec, |rep, x| {
        let nx = sorted_neighbors(dim, x);
        for (kind, y) in dim.incident(x) {
            if y < x {
                continue;
            }
            let ny = sorted_neighbors(dim, y);
            let brute: Vec<VertexId> = nx.iter().copied().filter(|w| ny.binary_search(w).is_ok()).collect();
            let size = brute.len();
            rep.record(&format!("common={size}"), size, None);
            if size != 2 && size != 4 {
                rep.violate(Violation {
                    reason: "adjacent pair with neither two nor four common neighbors".into(),
                    witness: vec![x.0, y.0],
                    class: Some(kind.to_string()),
                    observed: size,
                    expected: 4,
                });
            }
            let back = dim.classify_edge(y, x).expect("edge is symmetric");
            for (from, k) in [(x, kind), (y, back)] {
                let formula = common_neighbors_formula(dim, from, k).expect("valid edge");
                if formula != brute {
                    rep.violate(Violation {
                        reason: format!("closed form differs from intersection at {from} along {k}"),
                        witness: vec![x.0, y.0],
                        class: Some(k.to_string()),
                        observed: size,
                        expected: formula.len(),
                    });
                }
            }
        }
    }))
}

/// Any two distinct vertices have at most four common neighbors. `3 <= n <= 8`.
pub fn verify_pair_common(n: u32, exec: Exec) -> Result<CensusReport> {
    let dim = require_range("pairwise common-neighbor check", n, 3, 8)?;
    let lists: Vec<Vec<VertexId>> = dim.vertices().map(|x| sorted_neighbors(dim, x)).collect();
    Ok(run_by_center("pair-common", dim, exec, |rep, x| {
        let nx = &lists[x.0 as usize];
        for y in (x.0 + 1)..dim.vertex_count() as u32 {
            let size = intersect_count(nx, &lists[y as usize]);
            rep.record(&format!("common={size}"), size, None);
            if size > 4 {
                rep.violate(Violation {
                    reason: "more than four common neighbors".into(),
                    witness: vec![x.0, y],
                    class: None,
                    observed: size,
                    expected: 4,
                });
            }
        }
    }))
}

/// Sorted `N({Y, X, Z})` given the three sorted neighbor lists.
fn path_neighborhood(path: [VertexId; 3], lists: [&[VertexId]; 3]) -> Vec<VertexId> {
    let mut out: Vec<VertexId> = lists.iter().flat_map(|l| l.iter().copied()).collect();
    out.sort_unstable();
    out.dedup();
    out.retain(|w| !path.contains(w));
    out
}

/// Unordered 2-paths at `x`: pairs of incident edges `(a, b)` with `a` before
/// `b` in generation order.
fn incident_pairs(dim: Dimension, x: VertexId) -> Vec<((EdgeKind, VertexId), (EdgeKind, VertexId))> {
    let inc: Vec<(EdgeKind, VertexId)> = dim.incident(x).collect();
    let mut out = Vec::with_capacity(inc.len() * inc.len() / 2);
    for a in 0..inc.len() {
        for b in (a + 1)..inc.len() {
            out.push((inc[a], inc[b]));
        }
    }
    out
}

fn canonical_ends(
    class: &PathClass,
    a: (EdgeKind, VertexId),
    b: (EdgeKind, VertexId),
) -> (VertexId, VertexId) {
    // Y carries dimension i, Z carries dimension j
    let y_kind = match class.family {
        PathFamily::HH => EdgeKind::Hypercube(class.i),
        PathFamily::CC => EdgeKind::Complement(class.i),
        PathFamily::HC => EdgeKind::Hypercube(class.i),
    };
    if a.0 == y_kind {
        (a.1, b.1)
    } else {
        (b.1, a.1)
    }
}

/// Scans every 2-path `P = (Y, X, Z)`: `|N(P)|` must equal its table value,
/// never drop below `6n - 17` (attained), stay at or above `6n - 15` when an
/// end is `X̄_n`, and the three neighborhoods share at most one vertex.
/// `5 <= n <= 12`.
pub fn census_path2(n: u32, exec: Exec) -> Result<CensusReport> {
    let dim = require_range("2-path census", n, 5, 12)?;
    let n_us = n as usize;
    let bound = 6 * n_us - 17;
    let refined_bound = 6 * n_us - 15;
    let mut report = run_by_center("path2", dim, exec, |rep, x| {
        let nx = sorted_neighbors(dim, x);
        let top = x.complement(n);
        for (a, b) in incident_pairs(dim, x) {
            let class = path2_class_unchecked(n, a.0, b.0);
            let (y, z) = canonical_ends(&class, a, b);
            let (ny, nz) = (sorted_neighbors(dim, y), sorted_neighbors(dim, z));
            let size = path_neighborhood([y, x, z], [&nx, &ny, &nz]).len();
            let key = class.key();
            let expected = 6 * n_us - PathClass::offset_for_key(&key).expect("known row");
            rep.record(&key, size, Some(expected));

            let witness = vec![x.0, y.0, z.0];
            let mut fail = |reason: &str, expect: usize| {
                rep.violate(Violation {
                    reason: reason.into(),
                    witness: witness.clone(),
                    class: Some(key.clone()),
                    observed: size,
                    expected: expect,
                })
            };
            if size != expected {
                fail("neighborhood size differs from its table row", expected);
            }
            if size < bound {
                fail("neighborhood smaller than 6n-17", bound);
            }
            let refined = y == top || z == top;
            if refined && size < refined_bound {
                fail("neighborhood smaller than 6n-15 with an end at the top complement neighbor", refined_bound);
            }

            let common: Vec<VertexId> = nx.iter().copied().filter(|w| ny.binary_search(w).is_ok()).collect();
            let triple = intersect_count(&common, &nz);
            if triple > 1 {
                rep.violate(Violation {
                    reason: "three path vertices share more than one neighbor".into(),
                    witness: vec![x.0, y.0, z.0],
                    class: Some(key.clone()),
                    observed: triple,
                    expected: 1,
                });
            }
            rep.triple_max = opt_max(rep.triple_max, Some(triple));
            if refined {
                rep.refined_min = opt_min(rep.refined_min, Some(size));
            }
        }
    });
    if report.min_observed != Some(bound) {
        report.violate(Violation {
            reason: "minimum over all 2-paths is not 6n-17".into(),
            witness: Vec::new(),
            class: None,
            observed: report.min_observed.unwrap_or(0),
            expected: bound,
        });
    }
    Ok(report)
}

/// For every 2-path `P` and every `U ∈ N(P)`: `|N({U, X, Y, Z})| >= 8n - 31`,
/// and `>= 8n - 29` when an end of `P` is `X̄_n`. Classes count how many path
/// vertices `U` is adjacent to. `5 <= n <= 9`.
pub fn verify_quad_bound(n: u32, exec: Exec) -> Result<CensusReport> {
    let dim = require_range("quad neighborhood check", n, 5, 9)?;
    let n_us = n as usize;
    let bound = 8 * n_us - 31;
    let refined_bound = 8 * n_us - 29;
    Ok(run_by_center("quad-bound", dim, exec, |rep, x| {
        let nx = sorted_neighbors(dim, x);
        let top = x.complement(n);
        for (a, b) in incident_pairs(dim, x) {
            let (y, z) = (a.1, b.1);
            let (ny, nz) = (sorted_neighbors(dim, y), sorted_neighbors(dim, z));
            let path = [y, x, z];
            let np = path_neighborhood(path, [&nx, &ny, &nz]);
            let refined = y == top || z == top;
            for &u in &np {
                let nu = sorted_neighbors(dim, u);
                let on_path = nu.iter().filter(|w| path.contains(w)).count();
                let fresh = nu
                    .iter()
                    .filter(|w| !path.contains(w) && np.binary_search(w).is_err())
                    .count();
                // U leaves N(P) and joins the set
                let size = np.len() - 1 + fresh;
                rep.record(&format!("adjacent-to-path={on_path}"), size, None);
                let limit = if refined { refined_bound } else { bound };
                if size < limit {
                    rep.violate(Violation {
                        reason: "four-vertex neighborhood below its bound".into(),
                        witness: vec![x.0, y.0, z.0, u.0],
                        class: None,
                        observed: size,
                        expected: limit,
                    });
                }
                if refined {
                    rep.refined_min = opt_min(rep.refined_min, Some(size));
                }
            }
        }
    }))
}
