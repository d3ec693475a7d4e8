//! Report documents: canonical JSON, table rendering and digests.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphInfo {
    pub n: u32,
    pub vertices: u64,
    pub edges: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckInfo {
    pub name: String,
    pub params: BTreeMap<String, Value>,
}

/// One check, one document. `pass` is true exactly when `violations` is empty.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub schema_version: u32,
    pub graph: GraphInfo,
    pub check: CheckInfo,
    pub method: String,
    pub pass: bool,
    pub result: BTreeMap<String, Value>,
    pub violations: Vec<Value>,
    /// Wall-clock time; the only field outside the determinism digest.
    pub runtime_ms: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Structured,
    Table,
}

impl FromStr for ReportFormat {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "structured" | "json" => Ok(ReportFormat::Structured),
            "table" => Ok(ReportFormat::Table),
            other => Err(CliError::Usage(format!(
                "unknown report format {other:?}, expected structured or table"
            ))),
        }
    }
}

impl Report {
    pub fn new(graph: GraphInfo, check: CheckInfo, method: &str) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            graph,
            check,
            method: method.to_string(),
            pass: true,
            result: BTreeMap::new(),
            violations: Vec::new(),
            runtime_ms: 0,
        }
    }

    pub fn set<T: Serialize>(&mut self, key: &str, value: T) {
        let v = serde_json::to_value(value).expect("report values serialize");
        self.result.insert(key.to_string(), v);
    }

    pub fn violate<T: Serialize>(&mut self, violation: T) {
        self.violations.push(serde_json::to_value(violation).expect("violations serialize"));
        self.pass = false;
    }

    /// Sha-256 over the canonical document with `runtime_ms` removed.
    pub fn digest(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if let Value::Object(map) = &mut v {
            map.remove("runtime_ms");
        }
        let text = serde_json::to_string(&v).expect("value serializes");
        hex::encode(Sha256::digest(text.as_bytes()))
    }
}

/// Serializes with sorted keys (every map goes through `serde_json::Value`).
pub fn emit_report(report: &Report, format: ReportFormat) -> Vec<u8> {
    match format {
        ReportFormat::Structured => {
            let v = serde_json::to_value(report).expect("report serializes");
            let mut text = serde_json::to_string_pretty(&v).expect("value serializes");
            text.push('\n');
            text.into_bytes()
        }
        ReportFormat::Table => render_table(report).into_bytes(),
    }
}

/// Parses a structured report. Errors name the offending field by path.
pub fn load_report(bytes: &[u8]) -> Result<Report, CliError> {
    let de = &mut serde_json::Deserializer::from_slice(bytes);
    let report: Report = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        CliError::Schema {
            field: path,
            msg: e.into_inner().to_string(),
        }
    })?;
    if report.schema_version != SCHEMA_VERSION {
        return Err(CliError::Schema {
            field: "schema_version".into(),
            msg: format!("unsupported version {}, expected {SCHEMA_VERSION}", report.schema_version),
        });
    }
    Ok(report)
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_table(r: &Report) -> String {
    let mut out = String::new();
    let params: Vec<String> = r.check.params.iter().map(|(k, v)| format!("{k}={}", scalar(v))).collect();
    let _ = writeln!(out, "{:<10}{}", "check", r.check.name);
    let _ = writeln!(out, "{:<10}{}", "params", params.join(" "));
    let _ = writeln!(
        out,
        "{:<10}AQ_{}: {} vertices, {} edges",
        "graph", r.graph.n, r.graph.vertices, r.graph.edges
    );
    let _ = writeln!(out, "{:<10}{}", "method", r.method);
    let _ = writeln!(out, "{:<10}{}", "status", if r.pass { "PASS" } else { "FAIL" });
    let _ = writeln!(out, "{:<10}{} ms", "runtime", r.runtime_ms);

    let mut tables = Vec::new();
    let width = r.result.keys().map(|k| k.len()).max().unwrap_or(0) + 2;
    out.push('\n');
    for (key, value) in &r.result {
        match value {
            Value::Object(map) if map.values().all(Value::is_object) && !map.is_empty() => tables.push((key, map)),
            Value::Array(_) | Value::Object(_) => {
                let _ = writeln!(out, "{key:<width$}{value}");
            }
            other => {
                let _ = writeln!(out, "{key:<width$}{}", scalar(other));
            }
        }
    }
    for (key, map) in tables {
        let mut columns: Vec<&String> = Vec::new();
        for row in map.values().filter_map(Value::as_object) {
            for c in row.keys() {
                if !columns.contains(&c) {
                    columns.push(c);
                }
            }
        }
        let first = map.keys().map(|k| k.len()).max().unwrap_or(0).max(key.len()) + 2;
        let _ = write!(out, "\n{key:<first$}");
        for c in &columns {
            let _ = write!(out, "{c:>10}");
        }
        out.push('\n');
        for (name, row) in map {
            let _ = write!(out, "{name:<first$}");
            for c in &columns {
                let cell = row.get(c.as_str()).map(scalar).unwrap_or_else(|| "-".into());
                let _ = write!(out, "{cell:>10}");
            }
            out.push('\n');
        }
    }
    let _ = writeln!(out, "\nviolations: {}", r.violations.len());
    for v in &r.violations {
        let _ = writeln!(out, "  {v}");
    }
    out
}
