//! Exact classical and h-extra connectivity on materialized graphs.
//!
//! * `Flow`: Menger duality on unit-capacity networks (h = 0 only).
//! * `Exhaustive`: enumerates every vertex subset (vertex kind) or every
//!   bipartition (edge kind). Limited to 16 vertices.
//! * `Fragment`: branch and bound over connected vertex sets `A` with
//!   `|A| <= |V|/2`, scoring the edge boundary `∂A`.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{AqError, Result};
use crate::exec::{fold_reduce, map_collect, map_collect_init, position_first, Exec};
use crate::flow::FlowNetwork;
use crate::graph::{Edge, Graph};

/// Vertex budget of the exhaustive engine.
pub const EXHAUSTIVE_MAX_VERTICES: usize = 16;
/// Vertex budget of the fragment engine.
pub const FRAGMENT_MAX_VERTICES: usize = 4096;
pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(300);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConnKind {
    Vertex,
    Edge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Flow,
    Exhaustive,
    Fragment,
}

macro_rules! lowercase_enum {
    ($ty:ident { $($var:ident => $name:literal),* }) => {
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(match self { $($ty::$var => $name),* })
            }
        }
        impl FromStr for $ty {
            type Err = AqError;
            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok($ty::$var),)*
                    other => Err(AqError::Argument(format!(
                        concat!("unknown ", stringify!($ty), " {:?}"), other
                    ))),
                }
            }
        }
    };
}

lowercase_enum!(ConnKind { Vertex => "vertex", Edge => "edge" });
lowercase_enum!(Method { Flow => "flow", Exhaustive => "exhaustive", Fragment => "fragment" });

/// A vertex cut or an edge cut. Members are kept sorted, so the derived
/// ordering compares certificates lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "members", rename_all = "lowercase")]
pub enum Cut {
    Vertex(Vec<u32>),
    Edge(Vec<Edge>),
}

impl Cut {
    pub fn kind(&self) -> ConnKind {
        match self {
            Cut::Vertex(_) => ConnKind::Vertex,
            Cut::Edge(_) => ConnKind::Edge,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Cut::Vertex(v) => v.len(),
            Cut::Edge(e) => e.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Flow computations, candidate subsets, or search-tree nodes.
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityResult {
    /// `None` when no qualifying cut exists (or none was found before a timeout).
    pub value: Option<usize>,
    pub certificate: Option<Cut>,
    pub method: Method,
    /// False when a timeout left `value` as an upper bound only.
    pub exact: bool,
    /// Set for complete graphs, where the value is `|V| - 1` by convention.
    pub complete_convention: bool,
    pub stats: SearchStats,
}

impl ConnectivityResult {
    fn new(value: Option<usize>, certificate: Option<Cut>, method: Method, start: Instant, nodes: u64) -> Self {
        ConnectivityResult {
            value,
            certificate,
            method,
            exact: true,
            complete_convention: false,
            stats: SearchStats {
                nodes,
                elapsed: start.elapsed(),
            },
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    pub exec: Exec,
    pub timeout: Duration,
    /// Largest fragment explored; defaults to `|V| / 2`.
    pub size_cap: Option<usize>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            exec: Exec::default(),
            timeout: DEFAULT_TIMEOUT,
            size_cap: None,
        }
    }
}

fn check_vertex(g: &Graph, v: u32) -> Result<()> {
    if (v as usize) < g.vertex_count() {
        Ok(())
    } else {
        Err(AqError::Argument(format!(
            "vertex {v} outside 0..{}",
            g.vertex_count()
        )))
    }
}

/// Minimum `s`-`t` vertex or edge cut by max-flow.
pub fn menger_local(g: &Graph, s: u32, t: u32, kind: ConnKind) -> Result<ConnectivityResult> {
    check_vertex(g, s)?;
    check_vertex(g, t)?;
    if s == t {
        return Err(AqError::Argument("source and sink coincide".into()));
    }
    let start = Instant::now();
    let mut net = match kind {
        ConnKind::Vertex => {
            if g.has_edge(s, t) {
                return Err(AqError::Argument(format!(
                    "{s} and {t} are adjacent; no vertex set separates them"
                )));
            }
            FlowNetwork::vertex_split(g)
        }
        ConnKind::Edge => FlowNetwork::edge_unit(g),
    };
    let (value, cut) = net.min_cut(s, t, usize::MAX);
    Ok(ConnectivityResult::new(Some(value), cut, Method::Flow, start, 1))
}

/// Minimum local cut over `pairs`; ties go to the lexicographically smallest
/// certificate.
fn min_over_pairs(net: &FlowNetwork, pairs: &[(u32, u32)], exec: Exec) -> Option<(usize, Cut)> {
    let best = AtomicUsize::new(usize::MAX);
    let found = map_collect_init(
        exec,
        pairs,
        || net.clone(),
        |net, &(s, t)| {
            // pairs that can only tie or beat the incumbent must run to completion
            let limit = best.load(Ordering::Relaxed).saturating_add(1);
            let (value, cut) = net.min_cut(s, t, limit);
            let cut = cut?;
            best.fetch_min(value, Ordering::Relaxed);
            Some((value, cut))
        },
    );
    found.into_iter().flatten().min()
}

fn disconnected_result(kind: ConnKind, start: Instant) -> ConnectivityResult {
    let empty = match kind {
        ConnKind::Vertex => Cut::Vertex(Vec::new()),
        ConnKind::Edge => Cut::Edge(Vec::new()),
    };
    ConnectivityResult::new(Some(0), Some(empty), Method::Flow, start, 0)
}

/// `κ(G)` by vertex-split max-flow.
///
/// With `v0` a vertex of minimum degree, every minimum vertex cut separates
/// `v0` from some non-neighbor, or (when it contains `v0`) two non-adjacent
/// neighbors of `v0`; only those pairs are tried.
pub fn vertex_connectivity(g: &Graph, exec: Exec) -> ConnectivityResult {
    let start = Instant::now();
    let nv = g.vertex_count();
    if g.is_complete() {
        let mut r = ConnectivityResult::new(Some(nv.saturating_sub(1)), None, Method::Flow, start, 0);
        r.complete_convention = true;
        return r;
    }
    if !g.is_connected() {
        return disconnected_result(ConnKind::Vertex, start);
    }
    let v0 = (0..nv as u32).min_by_key(|&v| (g.degree(v), v)).expect("non-empty");
    let mut pairs: Vec<(u32, u32)> = (0..nv as u32)
        .filter(|&t| t != v0 && !g.has_edge(v0, t))
        .map(|t| (v0, t))
        .collect();
    let nb = g.neighbors(v0);
    for (a, &x) in nb.iter().enumerate() {
        for &y in &nb[a + 1..] {
            if !g.has_edge(x, y) {
                pairs.push((x, y));
            }
        }
    }
    let net = FlowNetwork::vertex_split(g);
    let (value, cut) = min_over_pairs(&net, &pairs, exec).expect("non-complete graph has a separable pair");
    ConnectivityResult::new(Some(value), Some(cut), Method::Flow, start, pairs.len() as u64)
}

/// `λ(G)` by unit-capacity max-flow from vertex 0 to every other vertex.
pub fn edge_connectivity(g: &Graph, exec: Exec) -> ConnectivityResult {
    let start = Instant::now();
    let nv = g.vertex_count();
    if nv <= 1 {
        return ConnectivityResult::new(Some(0), Some(Cut::Edge(Vec::new())), Method::Flow, start, 0);
    }
    if !g.is_connected() {
        return disconnected_result(ConnKind::Edge, start);
    }
    let pairs: Vec<(u32, u32)> = (1..nv as u32).map(|t| (0, t)).collect();
    let net = FlowNetwork::edge_unit(g);
    let (value, cut) = min_over_pairs(&net, &pairs, exec).expect("at least one pair");
    ConnectivityResult::new(Some(value), Some(cut), Method::Flow, start, pairs.len() as u64)
}

/// Whether removing the masked vertices leaves a disconnected graph whose
/// components all have more than `h` vertices.
fn vertex_cut_ok(g: &Graph, removed: u32, h: usize) -> bool {
    let alive: Vec<bool> = (0..g.vertex_count()).map(|v| removed >> v & 1 == 0).collect();
    let sizes = g.component_sizes(&alive, |_, _| true);
    sizes.len() >= 2 && sizes[0] > h
}

/// Every component of `G[side]` has more than `h` vertices (side nonempty).
fn side_ok(g: &Graph, side: u32, h: usize) -> bool {
    let alive: Vec<bool> = (0..g.vertex_count()).map(|v| side >> v & 1 == 1).collect();
    let sizes = g.component_sizes(&alive, |_, _| true);
    !sizes.is_empty() && sizes[0] > h
}

/// Subsets of `0..n` of size `k`, in lexicographic order of member lists.
fn combinations(n: usize, k: usize) -> Vec<u32> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().fold(0u32, |m, &i| m | 1 << i));
        let Some(p) = (0..k).rev().find(|&p| idx[p] < n - k + p) else {
            return out;
        };
        idx[p] += 1;
        for q in p + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

fn members(mask: u32) -> Vec<u32> {
    (0..32).filter(|v| mask >> v & 1 == 1).collect()
}

fn boundary_of_mask(g: &Graph, mask: u32) -> Vec<Edge> {
    let mut out = Vec::new();
    for u in members(mask) {
        for &v in g.neighbors(u) {
            if mask >> v & 1 == 0 {
                out.push(Edge::new(u, v));
            }
        }
    }
    out.sort_unstable();
    out
}

/// `κ_h` or `λ_h` by full enumeration; `|V| <= 16`.
///
/// Vertex kind tries every `S` by increasing size, in lexicographic order
/// within a size, so the first valid `S` is the minimum and the smallest
/// certificate. Edge kind scores `∂A` over every bipartition `(A, V \ A)`
/// whose two sides induce only components of more than `h` vertices.
pub fn extra_conn_exhaustive(g: &Graph, h: usize, kind: ConnKind, exec: Exec) -> Result<ConnectivityResult> {
    let nv = g.vertex_count();
    if nv > EXHAUSTIVE_MAX_VERTICES {
        return Err(AqError::Capacity(format!(
            "exhaustive search is limited to {EXHAUSTIVE_MAX_VERTICES} vertices, graph has {nv}"
        )));
    }
    let start = Instant::now();
    match kind {
        ConnKind::Vertex => {
            let mut examined = 0u64;
            for k in 0..nv.saturating_sub(1) {
                let candidates = combinations(nv, k);
                if let Some(pos) = position_first(exec, &candidates, |&m| vertex_cut_ok(g, m, h)) {
                    examined += pos as u64 + 1;
                    let cut = Cut::Vertex(members(candidates[pos]));
                    return Ok(ConnectivityResult::new(Some(k), Some(cut), Method::Exhaustive, start, examined));
                }
                examined += candidates.len() as u64;
            }
            Ok(ConnectivityResult::new(None, None, Method::Exhaustive, start, examined))
        }
        ConnKind::Edge => {
            if nv < 2 {
                return Ok(ConnectivityResult::new(None, None, Method::Exhaustive, start, 0));
            }
            let full = (1u32 << nv) - 1;
            // A always holds vertex 0; its complement covers the mirrored sides
            let count = 1usize << (nv - 1);
            let best = fold_reduce(
                exec,
                count,
                || None::<(usize, Vec<Edge>)>,
                |acc, idx| {
                    let a = (idx as u32) << 1 | 1;
                    if a == full {
                        return acc;
                    }
                    let size = boundary_of_mask(g, a).len();
                    if matches!(&acc, Some((b, _)) if size > *b) {
                        return acc;
                    }
                    if !side_ok(g, a, h) || !side_ok(g, full & !a, h) {
                        return acc;
                    }
                    let cand = (size, boundary_of_mask(g, a));
                    match acc {
                        Some(cur) if cur <= cand => Some(cur),
                        _ => Some(cand),
                    }
                },
                |x, y| match (x, y) {
                    (Some(a), Some(b)) => Some(a.min(b)),
                    (a, None) => a,
                    (None, b) => b,
                },
            );
            let (value, cut) = match best {
                Some((v, e)) => (Some(v), Some(Cut::Edge(e))),
                None => (None, None),
            };
            Ok(ConnectivityResult::new(value, cut, Method::Exhaustive, start, count as u64))
        }
    }
}

const FREE: u8 = 0;
const IN: u8 = 1;
const OUT: u8 = 2;

/// Depth-first include/exclude search over connected sets whose smallest
/// vertex is `root`. Every such set is visited exactly once.
struct FragmentSearch<'a> {
    g: &'a Graph,
    h: usize,
    cap: usize,
    best: &'a AtomicUsize,
    timed_out: &'a AtomicBool,
    deadline: Instant,
    state: Vec<u8>,
    members: Vec<u32>,
    /// |∂A|
    boundary: usize,
    /// Edges from A to excluded vertices: a lower bound on |∂A'| for every
    /// set A' reachable from this node.
    forced: usize,
    scratch: Vec<u32>,
    nodes: u64,
    found: Option<(usize, Vec<Edge>)>,
}

impl<'a> FragmentSearch<'a> {
    fn run(&mut self, root: u32) {
        for v in 0..root {
            self.state[v as usize] = OUT;
        }
        self.include(root);
        self.explore();
    }

    fn count_in(&self, v: u32, which: u8) -> usize {
        self.g
            .neighbors(v)
            .iter()
            .filter(|&&w| self.state[w as usize] == which)
            .count()
    }

    fn include(&mut self, v: u32) {
        let inside = self.count_in(v, IN);
        self.boundary = self.boundary + self.g.degree(v) - 2 * inside;
        self.forced += self.count_in(v, OUT);
        self.state[v as usize] = IN;
        self.members.push(v);
    }

    fn uninclude(&mut self, v: u32) {
        self.members.pop();
        self.state[v as usize] = FREE;
        let inside = self.count_in(v, IN);
        self.boundary = self.boundary + 2 * inside - self.g.degree(v);
        self.forced -= self.count_in(v, OUT);
    }

    /// Free vertex adjacent to A with the most neighbors in A (smallest id on ties).
    fn pick(&mut self) -> Option<(u32, usize)> {
        let mut touched = Vec::new();
        for &a in &self.members {
            for &w in self.g.neighbors(a) {
                if self.state[w as usize] == FREE {
                    if self.scratch[w as usize] == 0 {
                        touched.push(w);
                    }
                    self.scratch[w as usize] += 1;
                }
            }
        }
        let mut choice: Option<(u32, usize)> = None;
        for &w in &touched {
            let c = self.scratch[w as usize] as usize;
            self.scratch[w as usize] = 0;
            choice = match choice {
                Some((v, cv)) if cv > c || (cv == c && v < w) => Some((v, cv)),
                _ => Some((w, c)),
            };
        }
        choice
    }

    fn evaluate(&mut self) {
        let alive: Vec<bool> = self.state.iter().map(|&s| s != IN).collect();
        let sizes = self.g.component_sizes(&alive, |_, _| true);
        if sizes.is_empty() || sizes[0] <= self.h {
            return;
        }
        let mut cut = Vec::with_capacity(self.boundary);
        for &u in &self.members {
            for &v in self.g.neighbors(u) {
                if self.state[v as usize] != IN {
                    cut.push(Edge::new(u, v));
                }
            }
        }
        cut.sort_unstable();
        let cand = (self.boundary, cut);
        if self.found.as_ref().is_none_or(|f| cand < *f) {
            self.found = Some(cand);
        }
        self.best.fetch_min(self.boundary, Ordering::Relaxed);
    }

    fn explore(&mut self) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) && Instant::now() >= self.deadline {
            self.timed_out.store(true, Ordering::Relaxed);
        }
        if self.timed_out.load(Ordering::Relaxed) {
            return;
        }
        let best = self.best.load(Ordering::Relaxed);
        if self.forced > best {
            return;
        }
        if self.members.len() > self.h && self.boundary <= best {
            self.evaluate();
        }
        if self.members.len() >= self.cap {
            return;
        }
        let Some((v, into_a)) = self.pick() else {
            return;
        };
        self.include(v);
        self.explore();
        self.uninclude(v);

        self.state[v as usize] = OUT;
        self.forced += into_a;
        self.explore();
        self.forced -= into_a;
        self.state[v as usize] = FREE;
    }
}

/// `λ_h` by branch and bound over connected fragments `A`, `h < |A| <= cap`.
///
/// For a connected graph a minimum h-extra edge cut splits it into exactly
/// two connected sides, one of which has at most `|V|/2` vertices, so the
/// search is exact when it completes with the default cap. On timeout the
/// best cut found so far is returned with `exact = false`.
pub fn extra_conn_fragment(g: &Graph, h: usize, kind: ConnKind, config: &SearchConfig) -> Result<ConnectivityResult> {
    if kind != ConnKind::Edge {
        return Err(AqError::Argument("fragment search supports edge cuts only".into()));
    }
    let nv = g.vertex_count();
    if nv > FRAGMENT_MAX_VERTICES {
        return Err(AqError::Capacity(format!(
            "fragment search is limited to {FRAGMENT_MAX_VERTICES} vertices, graph has {nv}"
        )));
    }
    let start = Instant::now();
    let cap = config.size_cap.unwrap_or(nv / 2).min(nv.saturating_sub(1));
    let best = AtomicUsize::new(usize::MAX);
    let timed_out = AtomicBool::new(false);
    let deadline = start + config.timeout;
    let roots: Vec<u32> = (0..nv as u32).collect();

    let per_root = map_collect(config.exec, &roots, |&root| {
        let mut search = FragmentSearch {
            g,
            h,
            cap,
            best: &best,
            timed_out: &timed_out,
            deadline,
            state: vec![FREE; nv],
            members: Vec::with_capacity(cap),
            boundary: 0,
            forced: 0,
            scratch: vec![0; nv],
            nodes: 0,
            found: None,
        };
        if cap > 0 {
            search.run(root);
        }
        (search.nodes, search.found)
    });

    let nodes = per_root.iter().map(|(n, _)| n).sum();
    let found = per_root.into_iter().filter_map(|(_, f)| f).min();
    let (value, cut) = match found {
        Some((v, e)) => (Some(v), Some(Cut::Edge(e))),
        None => (None, None),
    };
    let mut result = ConnectivityResult::new(value, cut, Method::Fragment, start, nodes);
    result.exact = !timed_out.load(Ordering::Relaxed);
    Ok(result)
}
