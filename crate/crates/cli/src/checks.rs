//! The checks behind every verb, each producing one [`Report`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use aqcube::census::{self, CensusReport};
use aqcube::connectivity::{
    edge_connectivity, extra_conn_exhaustive, extra_conn_fragment, vertex_connectivity,
};
use aqcube::cuts::{
    kappa2_candidate_cut, lambda2_candidate_cut, super_edge_cut, super_vertex_cut, validate_cut,
};
use aqcube::neighborhood::path2_class;
use aqcube::{
    AqError, AugCube, ConnKind, Cut, Dimension, EdgeKind, Exec, Graph, Half, Method, SearchConfig, VertexId,
};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::report::{CheckInfo, GraphInfo, Report};

/// Largest dimension for the structure check and for cut validation.
pub const MATERIALIZE_MAX_DIM: u32 = 16;
/// Largest dimension for the flow engines.
pub const FLOW_MAX_DIM: u32 = 12;
/// Largest dimension for the fragment engine.
pub const FRAGMENT_MAX_DIM: u32 = 12;
/// Witnesses kept by the structure check.
const MAX_WITNESSES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutFamily {
    Kappa2,
    Lambda2,
    SuperVertex,
    SuperEdge,
}

impl CutFamily {
    pub fn name(self) -> &'static str {
        match self {
            CutFamily::Kappa2 => "kappa2",
            CutFamily::Lambda2 => "lambda2",
            CutFamily::SuperVertex => "super-vertex",
            CutFamily::SuperEdge => "super-edge",
        }
    }

    /// The extra level the construction is certified against.
    pub fn h(self) -> usize {
        match self {
            CutFamily::Kappa2 | CutFamily::Lambda2 => 2,
            CutFamily::SuperVertex | CutFamily::SuperEdge => 1,
        }
    }

    pub fn expected_size(self, n: u32) -> usize {
        let n = n as usize;
        match self {
            CutFamily::Kappa2 => 6 * n - 17,
            CutFamily::Lambda2 => 6 * n - 9,
            CutFamily::SuperVertex => 4 * n - 8,
            CutFamily::SuperEdge => 4 * n - 4,
        }
    }
}

impl fmt::Display for CutFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CutFamily {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        [CutFamily::Kappa2, CutFamily::Lambda2, CutFamily::SuperVertex, CutFamily::SuperEdge]
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| CliError::Usage(format!("unknown cut family {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    Structure { n: u32 },
    AdjacentCommon { n: u32 },
    PairCommon { n: u32 },
    QuadBound { n: u32 },
    Path2 { n: u32 },
    Conn {
        n: u32,
        kind: ConnKind,
        h: usize,
        method: Method,
        timeout_secs: u64,
        expect: Option<usize>,
    },
    Cut {
        n: u32,
        family: CutFamily,
        base: u32,
        i: Option<u32>,
        edge: Option<EdgeKind>,
    },
}

/// `flow` for classical connectivity, otherwise full enumeration while it
/// fits and fragment search beyond.
pub fn default_method(n: u32, h: usize) -> Method {
    if h == 0 {
        Method::Flow
    } else if n <= 4 {
        Method::Exhaustive
    } else {
        Method::Fragment
    }
}

impl Check {
    pub fn conn(n: u32, kind: ConnKind, h: usize, method: Option<Method>, expect: Option<usize>) -> Check {
        Check::Conn {
            n,
            kind,
            h,
            method: method.unwrap_or_else(|| default_method(n, h)),
            timeout_secs: aqcube::connectivity::DEFAULT_TIMEOUT.as_secs(),
            expect,
        }
    }

    /// Fills in the family defaults: `i = 2` for kappa2, `C2` for the super
    /// vertex cut and `H1` for the super edge cut.
    pub fn cut(n: u32, family: CutFamily, base: u32, i: Option<u32>, edge: Option<EdgeKind>) -> Check {
        let (i, edge) = match family {
            CutFamily::Kappa2 => (Some(i.unwrap_or(2)), None),
            CutFamily::Lambda2 => (None, None),
            CutFamily::SuperVertex => (None, Some(edge.unwrap_or(EdgeKind::Complement(2)))),
            CutFamily::SuperEdge => (None, Some(edge.unwrap_or(EdgeKind::Hypercube(1)))),
        };
        Check::Cut { n, family, base, i, edge }
    }

    pub fn n(&self) -> u32 {
        match *self {
            Check::Structure { n }
            | Check::AdjacentCommon { n }
            | Check::PairCommon { n }
            | Check::QuadBound { n }
            | Check::Path2 { n }
            | Check::Conn { n, .. }
            | Check::Cut { n, .. } => n,
        }
    }

    pub fn name(&self) -> String {
        match self {
            Check::Structure { .. } => "verify.structure".into(),
            Check::AdjacentCommon { .. } => "verify.adjacent-common".into(),
            Check::PairCommon { .. } => "verify.pair-common".into(),
            Check::QuadBound { .. } => "verify.quad-bound".into(),
            Check::Path2 { .. } => "census.path2".into(),
            Check::Conn { .. } => "conn".into(),
            Check::Cut { family, .. } => format!("cut.{family}"),
        }
    }

    pub fn params(&self) -> BTreeMap<String, Value> {
        let mut p = BTreeMap::new();
        p.insert("n".to_string(), json!(self.n()));
        match self {
            Check::Conn { kind, h, method, timeout_secs, expect, .. } => {
                p.insert("kind".into(), json!(kind.to_string()));
                p.insert("extra".into(), json!(h));
                p.insert("method".into(), json!(method.to_string()));
                if *method == Method::Fragment {
                    p.insert("timeout_secs".into(), json!(timeout_secs));
                }
                if let Some(e) = expect {
                    p.insert("expect".into(), json!(e));
                }
            }
            Check::Cut { base, i, edge, .. } => {
                p.insert("base".into(), json!(base));
                if let Some(i) = i {
                    p.insert("i".into(), json!(i));
                }
                if let Some(e) = edge {
                    p.insert("edge".into(), json!(e.to_string()));
                }
            }
            _ => {}
        }
        p
    }

    /// File-name stem, unique per distinct check.
    pub fn slug(&self) -> String {
        let mut s = self.name().replace('.', "-");
        match self {
            Check::Conn { kind, h, method, expect, .. } => {
                s.push_str(&format!("-{kind}-h{h}-{method}"));
                if let Some(e) = expect {
                    s.push_str(&format!("-expect{e}"));
                }
            }
            Check::Cut { base, i, edge, .. } => {
                s.push_str(&format!("-base{base}"));
                if let Some(i) = i {
                    s.push_str(&format!("-i{i}"));
                }
                if let Some(e) = edge {
                    s.push_str(&format!("-{e}"));
                }
            }
            _ => {}
        }
        format!("{s}-n{}", self.n())
    }

    fn method_label(&self) -> String {
        match self {
            Check::Conn { method, .. } => method.to_string(),
            Check::Cut { .. } => "construction".into(),
            _ => "exhaustive".into(),
        }
    }

    /// Runs the check. Errors are usage or capacity problems; failed checks
    /// come back as reports with `pass == false`.
    pub fn execute(&self, exec: Exec) -> Result<Report, CliError> {
        let start = Instant::now();
        let dim = Dimension::new(self.n())?;
        let graph = GraphInfo {
            n: dim.get(),
            vertices: dim.vertex_count() as u64,
            edges: dim.edge_count() as u64,
        };
        let info = CheckInfo { name: self.name(), params: self.params() };
        let mut report = Report::new(graph, info, &self.method_label());
        match self {
            Check::Structure { .. } => structure(dim, &mut report)?,
            Check::AdjacentCommon { n } => census_into(&mut report, census::verify_adjacent_common(*n, exec)?),
            Check::PairCommon { n } => census_into(&mut report, census::verify_pair_common(*n, exec)?),
            Check::QuadBound { n } => {
                report.set("bound", 8 * *n as usize - 31);
                report.set("refined_bound", 8 * *n as usize - 29);
                census_into(&mut report, census::verify_quad_bound(*n, exec)?)
            }
            Check::Path2 { n } => {
                report.set("bound", 6 * *n as usize - 17);
                report.set("refined_bound", 6 * *n as usize - 15);
                census_into(&mut report, census::census_path2(*n, exec)?)
            }
            Check::Conn { kind, h, method, timeout_secs, expect, .. } => {
                let cfg = SearchConfig {
                    exec,
                    timeout: Duration::from_secs(*timeout_secs),
                    size_cap: None,
                };
                conn(dim, *kind, *h, *method, &cfg, *expect, &mut report)?
            }
            Check::Cut { family, base, i, edge, .. } => cut(dim, *family, *base, *i, *edge, &mut report)?,
        }
        report.runtime_ms = start.elapsed().as_millis() as u64;
        Ok(report)
    }
}

fn require_max(what: &'static str, dim: Dimension, max: u32) -> Result<(), CliError> {
    if dim.get() > max {
        return Err(AqError::Capacity(format!("{what} is limited to n <= {max}, got n = {}", dim.get())).into());
    }
    Ok(())
}

fn materialize(what: &'static str, dim: Dimension, max: u32) -> Result<Graph, CliError> {
    require_max(what, dim, max)?;
    let cube = AugCube::build(dim)?;
    Ok(cube.require_graph()?.clone())
}

fn census_into(report: &mut Report, c: CensusReport) {
    report.set("total", c.total);
    report.set("classes", &c.classes);
    report.set("min_observed", c.min_observed);
    report.set("max_observed", c.max_observed);
    if let Some(v) = c.refined_min {
        report.set("refined_min", v);
    }
    if let Some(v) = c.triple_max {
        report.set("triple_max", v);
    }
    report.set("violation_count", c.violation_count);
    for v in &c.violations {
        report.violate(v);
    }
    // witness lists are capped, the count is not
    report.pass = c.pass();
}

struct Tally<'a> {
    report: &'a mut Report,
    count: u64,
}

impl Tally<'_> {
    fn fail(&mut self, reason: &str, witness: &[u32]) {
        self.count += 1;
        if self.report.violations.len() < MAX_WITNESSES {
            self.report.violate(json!({ "reason": reason, "witness": witness }));
        }
        self.report.pass = false;
    }
}

fn structure(dim: Dimension, report: &mut Report) -> Result<(), CliError> {
    let g = materialize("structure check", dim, MATERIALIZE_MAX_DIM)?;
    let n = dim.get();
    let degree = dim.degree();
    report.set("degree", degree);
    report.set("edge_count", g.edge_count());
    report.set("connected", g.is_connected());
    report.set("complete", dim.is_complete());

    let direct = dim.direct_edges()?;
    let mut recursive = dim.recursive_edges()?;
    recursive.sort_unstable();
    let mut t = Tally { report, count: 0 };

    if g.edge_count() != dim.edge_count() {
        t.fail("edge count differs from (2n-1)2^(n-1)", &[]);
    }
    if direct != recursive {
        t.fail("recursive construction differs from the adjacency rule", &[]);
    }
    if !g.is_connected() {
        t.fail("graph is disconnected", &[]);
    }
    for x in dim.vertices() {
        if g.degree(x.0) != degree {
            t.fail("vertex degree is not 2n-1", &[x.0]);
        }
        if x.hyper(1) != x.complement(1) {
            t.fail("X_1 differs from the first complement neighbor", &[x.0]);
        }
        for i in 1..=n {
            if x.hyper(i).hyper(i) != x || x.complement(i).complement(i) != x {
                t.fail("neighbor map is not an involution", &[x.0, i]);
            }
        }
        for &y in g.neighbors(x.0) {
            let there = dim.classify_edge(x, VertexId(y));
            if there.is_none() || there != dim.classify_edge(VertexId(y), x) {
                t.fail("edge classification is missing or asymmetric", &[x.0, y]);
            }
        }
        if n >= 2 {
            let side = dim.half(x)?;
            let crossed = g
                .neighbors(x.0)
                .iter()
                .filter(|&&y| dim.half(VertexId(y)).map(|h| h != side).unwrap_or(false))
                .count();
            let (a, b) = dim.crossed_neighbors(x)?;
            let pair_ok = [a, b].iter().all(|&c| g.has_edge(x.0, c.0) && dim.half(c).ok() == Some(other(side)));
            if crossed != 2 || !pair_ok {
                t.fail("vertex does not have exactly two crossed neighbors", &[x.0]);
            }
        }
    }
    let count = t.count;
    report.set("violation_count", count);
    Ok(())
}

fn other(h: Half) -> Half {
    match h {
        Half::L => Half::R,
        Half::R => Half::L,
    }
}

fn cut_json(cut: &Cut) -> Value {
    serde_json::to_value(cut).expect("cuts serialize")
}

fn conn(
    dim: Dimension,
    kind: ConnKind,
    h: usize,
    method: Method,
    cfg: &SearchConfig,
    expect: Option<usize>,
    report: &mut Report,
) -> Result<(), CliError> {
    let max = match method {
        Method::Flow => FLOW_MAX_DIM,
        Method::Fragment => FRAGMENT_MAX_DIM,
        Method::Exhaustive => 4,
    };
    if method == Method::Flow && h > 0 {
        return Err(CliError::Usage("the flow method computes classical connectivity only (--extra 0)".into()));
    }
    let g = materialize("this connectivity method", dim, max)?;
    let r = match method {
        Method::Flow => match kind {
            ConnKind::Vertex => vertex_connectivity(&g, cfg.exec),
            ConnKind::Edge => edge_connectivity(&g, cfg.exec),
        },
        Method::Exhaustive => extra_conn_exhaustive(&g, h, kind, cfg.exec)?,
        Method::Fragment => extra_conn_fragment(&g, h, kind, cfg)?,
    };
    report.set("value", r.value);
    report.set("exact", r.exact);
    report.set("complete_convention", r.complete_convention);
    match &r.certificate {
        Some(c) => {
            let cert = validate_cut(&g, c, h)?;
            report.set("certificate", cut_json(c));
            report.set("certificate_size", c.len());
            report.set("certificate_components", &cert.component_sizes);
            report.set("certificate_valid", cert.is_valid());
            if !cert.is_valid() && r.value != Some(0) {
                report.violate(json!({
                    "reason": "certificate does not validate as an h-extra cut",
                    "component_sizes": cert.component_sizes,
                }));
            }
            if r.value != Some(c.len()) {
                report.violate(json!({
                    "reason": "certificate size differs from the reported value",
                    "observed": c.len(),
                    "expected": r.value,
                }));
            }
        }
        None => report.set("certificate", Value::Null),
    }
    if let Some(e) = expect {
        if r.value != Some(e) {
            report.violate(json!({
                "reason": "value differs from the expected value",
                "observed": r.value,
                "expected": e,
            }));
        }
    }
    Ok(())
}

fn cut(
    dim: Dimension,
    family: CutFamily,
    base: u32,
    i: Option<u32>,
    edge: Option<EdgeKind>,
    report: &mut Report,
) -> Result<(), CliError> {
    let x = dim.vertex(base as u64)?;
    let members = match family {
        CutFamily::Kappa2 => {
            let (path, set) = kappa2_candidate_cut(dim, x, i.unwrap_or(2))?;
            let class = path2_class(dim, &path)?;
            let [y, c, z] = path.vertices();
            report.set("path", [y.0, c.0, z.0]);
            report.set("path_class", class.key());
            Cut::Vertex(set.iter().map(|v| v.0).collect())
        }
        CutFamily::Lambda2 => {
            let (tri, f) = lambda2_candidate_cut(dim, x)?;
            report.set("triangle", tri.map(|v| v.0));
            Cut::Edge(f)
        }
        CutFamily::SuperVertex => {
            let kind = edge.unwrap_or(EdgeKind::Complement(2));
            let set = super_vertex_cut(dim, x, kind)?;
            report.set("edge", [x.0, kind.apply(x).0]);
            Cut::Vertex(set.iter().map(|v| v.0).collect())
        }
        CutFamily::SuperEdge => {
            let kind = edge.unwrap_or(EdgeKind::Hypercube(1));
            let f = super_edge_cut(dim, x, kind)?;
            report.set("edge", [x.0, kind.apply(x).0]);
            Cut::Edge(f)
        }
    };
    let g = materialize("cut validation", dim, MATERIALIZE_MAX_DIM)?;
    let h = family.h();
    let cert = validate_cut(&g, &members, h)?;
    let expected = family.expected_size(dim.get());
    report.set("h", h);
    report.set("size", members.len());
    report.set("expected_size", expected);
    report.set("members", cut_json(&members));
    report.set("component_sizes", &cert.component_sizes);
    report.set("min_component", cert.min_component);
    report.set("valid", cert.is_valid());
    if members.len() != expected {
        report.violate(json!({
            "reason": "cut size differs from the closed form",
            "observed": members.len(),
            "expected": expected,
        }));
    }
    if !cert.is_valid() {
        report.violate(json!({
            "reason": "cut is not an h-extra cut",
            "component_sizes": cert.component_sizes,
        }));
    }
    Ok(())
}

/// Every check run by `--all`, in report order.
pub fn acceptance_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for (h, v) in [(2, 15), (1, 12), (0, 7)] {
        out.push(Check::conn(4, ConnKind::Edge, h, Some(Method::Exhaustive), Some(v)));
    }
    out.push(Check::conn(3, ConnKind::Vertex, 0, Some(Method::Flow), Some(4)));
    for n in 4..=10 {
        out.push(Check::conn(n, ConnKind::Vertex, 0, Some(Method::Flow), Some(2 * n as usize - 1)));
    }
    for n in 2..=9 {
        out.push(Check::conn(n, ConnKind::Edge, 0, Some(Method::Flow), Some(2 * n as usize - 1)));
    }
    out.extend((5..=10).map(|n| Check::Path2 { n }));
    out.extend((3..=10).map(|n| Check::AdjacentCommon { n }));
    out.extend((3..=8).map(|n| Check::PairCommon { n }));
    out.extend((5..=9).map(|n| Check::QuadBound { n }));
    out.extend((2..=6).map(|i| Check::cut(9, CutFamily::Kappa2, 0, Some(i), None)));
    for n in [10, 11] {
        out.push(Check::cut(n, CutFamily::Kappa2, 0, None, None));
    }
    out.extend((4..=11).map(|n| Check::cut(n, CutFamily::Lambda2, 0, None, None)));
    for (h, v) in [(0, 7), (1, 12), (2, 15)] {
        out.push(Check::conn(4, ConnKind::Edge, h, Some(Method::Fragment), Some(v)));
    }
    out.extend((1..=12).map(|n| Check::Structure { n }));
    out
}
