//! Plain-text graph formats.
//!
//! Edge list: a `<|V|> <|E|>` header, then one `u v` line per edge with
//! `u < v`, in ascending order. DIMACS: `p edge <|V|> <|E|>`, then
//! `e <u+1> <v+1>` lines. `c` comment lines are accepted on import.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use crate::error::{AqError, Result};
use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Dimacs,
}

impl FromStr for GraphFormat {
    type Err = AqError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" | "edge-list" => Ok(GraphFormat::EdgeList),
            "dimacs" => Ok(GraphFormat::Dimacs),
            other => Err(AqError::Argument(format!("unknown graph format {other:?}"))),
        }
    }
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFormat::EdgeList => "edgelist",
            GraphFormat::Dimacs => "dimacs",
        })
    }
}

pub fn write_graph<W: Write>(g: &Graph, format: GraphFormat, mut out: W) -> io::Result<()> {
    let edges = g.edges();
    match format {
        GraphFormat::EdgeList => {
            writeln!(out, "{} {}", g.vertex_count(), edges.len())?;
            for e in &edges {
                writeln!(out, "{} {}", e.u, e.v)?;
            }
        }
        GraphFormat::Dimacs => {
            writeln!(out, "p edge {} {}", g.vertex_count(), edges.len())?;
            for e in &edges {
                writeln!(out, "e {} {}", e.u + 1, e.v + 1)?;
            }
        }
    }
    out.flush()
}

pub fn export(g: &Graph, format: GraphFormat) -> Vec<u8> {
    let mut buf = Vec::new();
    write_graph(g, format, &mut buf).expect("writing to a Vec cannot fail");
    buf
}

pub fn import(text: &str, format: GraphFormat) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let err = |msg: String| AqError::Parse { line, msg };

        if format == GraphFormat::Dimacs && fields[0] == "c" {
            continue;
        }
        match header {
            None => {
                let counts = match (format, fields.as_slice()) {
                    (GraphFormat::EdgeList, [v, e]) => (*v, *e),
                    (GraphFormat::Dimacs, ["p", "edge", v, e]) => (*v, *e),
                    _ => return Err(err(format!("expected {format} header, got {trimmed:?}"))),
                };
                let v = parse_num(counts.0).map_err(&err)?;
                let e = parse_num(counts.1).map_err(&err)?;
                header = Some((v, e));
            }
            Some((nv, _)) => {
                let (a, b) = match (format, fields.as_slice()) {
                    (GraphFormat::EdgeList, [a, b]) => {
                        (parse_num(a).map_err(&err)?, parse_num(b).map_err(&err)?)
                    }
                    (GraphFormat::Dimacs, ["e", a, b]) => {
                        let a = parse_num(a).map_err(&err)?;
                        let b = parse_num(b).map_err(&err)?;
                        if a == 0 || b == 0 {
                            return Err(err("DIMACS vertex ids are 1-based".into()));
                        }
                        (a - 1, b - 1)
                    }
                    _ => return Err(err(format!("expected an edge line, got {trimmed:?}"))),
                };
                if a >= nv || b >= nv {
                    return Err(err(format!("vertex out of range 0..{nv}")));
                }
                if a == b {
                    return Err(err(format!("self-loop at vertex {a}")));
                }
                edges.push((line, Edge::new(a as u32, b as u32)));
            }
        }
    }

    let (nv, ne) = header.ok_or(AqError::Parse {
        line: last_line.max(1),
        msg: "missing header".into(),
    })?;
    if edges.len() != ne {
        return Err(AqError::Parse {
            line: last_line,
            msg: format!("header announces {ne} edges, found {}", edges.len()),
        });
    }
    let mut sorted: Vec<(Edge, usize)> = edges.iter().map(|&(l, e)| (e, l)).collect();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(AqError::Parse {
            line: w[0].1.max(w[1].1),
            msg: format!("duplicate edge {} {}", w[0].0.u, w[0].0.v),
        });
    }
    let plain: Vec<Edge> = sorted.into_iter().map(|(e, _)| e).collect();
    Graph::from_edges(nv, &plain)
}

fn parse_num(s: &str) -> std::result::Result<usize, String> {
    s.parse::<usize>().map_err(|_| format!("not a non-negative integer: {s:?}"))
}
