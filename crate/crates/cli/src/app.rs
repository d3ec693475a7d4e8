//! Argument parsing, dispatch and the exit-code contract.
//!
//! Exit codes: 0 when every check passes or the value was computed, 1 when a
//! violation or mismatch was found, 2 for usage and capacity errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use aqcube::io::{export, GraphFormat};
use aqcube::{AugCube, ConnKind, Dimension, EdgeKind, Exec, Method, VertexId};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::cache::{ResultCache, CACHE_ENV};
use crate::checks::{acceptance_checks, Check, CutFamily};
use crate::error::CliError;
use crate::report::{emit_report, Report, ReportFormat, SCHEMA_VERSION};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "aqcube",
    version,
    about = "Augmented cube construction, verification and connectivity reports",
    args_conflicts_with_subcommands = true,
    arg_required_else_help = true
)]
struct Cli {
    /// Run every acceptance check, writing one report per check and index.json
    #[arg(long)]
    all: bool,

    /// Report directory for --all
    #[arg(short = 'o', long, value_name = "DIR", default_value = "reports", requires = "all")]
    out: PathBuf,

    /// Reuse reports stored in this directory
    #[arg(long, global = true, env = CACHE_ENV, value_name = "DIR")]
    cache_dir: Option<PathBuf>,

    /// Run the engines on the calling thread only
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    verb: Option<Verb>,
}

#[derive(Debug, Args)]
struct Output {
    /// structured (JSON) or table
    #[arg(long, default_value = "structured")]
    format: ReportFormat,

    /// Write the report here instead of stdout
    #[arg(short = 'o', long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VerifyWhat {
    Structure,
    AdjacentCommon,
    PairCommon,
    QuadBound,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CensusWhat {
    Path2,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Write AQ_n as an edge list or DIMACS file
    Gen {
        #[arg(short = 'n')]
        n: u32,
        /// edgelist or dimacs
        #[arg(long, default_value = "edgelist")]
        format: GraphFormat,
        #[arg(short = 'o', long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Exhaustively check a structural or neighborhood property
    Verify {
        #[arg(value_enum)]
        what: VerifyWhat,
        #[arg(short = 'n')]
        n: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Tabulate neighborhood sizes over a family of subgraphs
    Census {
        #[arg(value_enum)]
        what: CensusWhat,
        #[arg(short = 'n')]
        n: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Compute classical or h-extra connectivity exactly
    Conn {
        #[arg(short = 'n')]
        n: u32,
        /// vertex or edge
        #[arg(long)]
        kind: ConnKind,
        /// Smallest allowed component order minus one
        #[arg(long, default_value_t = 0)]
        extra: usize,
        /// flow, exhaustive or fragment; chosen from n and h when omitted
        #[arg(long)]
        method: Option<Method>,
        /// Fragment search time limit in seconds
        #[arg(long, value_name = "SECS")]
        timeout: Option<u64>,
        /// Exit 1 unless the computed value equals this
        #[arg(long)]
        expect: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Build and certify an explicit cut
    Cut {
        /// kappa2, lambda2, super-vertex or super-edge
        family: CutFamily,
        #[arg(short = 'n')]
        n: u32,
        /// Base vertex as a binary label x_n...x_1
        #[arg(long, value_name = "BITS")]
        base: Option<String>,
        /// Complement index of the path ends (kappa2)
        #[arg(short = 'i')]
        i: Option<u32>,
        /// Edge kind at the base vertex, e.g. H1 or C3 (super cuts)
        #[arg(long)]
        edge: Option<EdgeKind>,
        #[command(flatten)]
        output: Output,
    },
}

struct Context {
    exec: Exec,
    cache: Option<ResultCache>,
}

impl Context {
    fn run_check(&self, check: &Check) -> Result<Report, CliError> {
        if let Some(hit) = self.cache.as_ref().and_then(|c| c.get(check)) {
            return Ok(hit);
        }
        let report = check.execute(self.exec)?;
        if let Some(c) = &self.cache {
            c.put(check, &report)?;
        }
        Ok(report)
    }
}

/// Parses `args` (program name first), runs the verb and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    let ctx = Context {
        exec: if cli.sequential { Exec::Sequential } else { Exec::default() },
        cache: cli.cache_dir.map(ResultCache::new),
    };
    let verb = match cli.verb {
        Some(v) => v,
        None if cli.all => return run_all(&ctx, &cli.out),
        None => return Err(CliError::Usage("no verb given".into())),
    };
    let (check, output) = match verb {
        Verb::Gen { n, format, out } => return generate(n, format, out.as_deref()),
        Verb::Verify { what, n, output } => {
            let check = match what {
                VerifyWhat::Structure => Check::Structure { n },
                VerifyWhat::AdjacentCommon => Check::AdjacentCommon { n },
                VerifyWhat::PairCommon => Check::PairCommon { n },
                VerifyWhat::QuadBound => Check::QuadBound { n },
            };
            (check, output)
        }
        Verb::Census { what: CensusWhat::Path2, n, output } => (Check::Path2 { n }, output),
        Verb::Conn { n, kind, extra, method, timeout, expect, output } => {
            let mut check = Check::conn(n, kind, extra, method, expect);
            if let Some(t) = timeout {
                match &mut check {
                    Check::Conn { method: Method::Fragment, timeout_secs, .. } => *timeout_secs = t,
                    _ => return Err(CliError::Usage("--timeout applies to --method fragment only".into())),
                }
            }
            (check, output)
        }
        Verb::Cut { family, n, base, i, edge, output } => {
            if i.is_some() && family != CutFamily::Kappa2 {
                return Err(CliError::Usage("-i applies to kappa2 only".into()));
            }
            if edge.is_some() && !matches!(family, CutFamily::SuperVertex | CutFamily::SuperEdge) {
                return Err(CliError::Usage("--edge applies to the super cuts only".into()));
            }
            let base = match base {
                Some(bits) => {
                    let x = VertexId::from_bits(&bits)?;
                    if bits.len() != n as usize {
                        return Err(CliError::Usage(format!("--base needs exactly {n} bits, got {bits:?}")));
                    }
                    x.0
                }
                None => 0,
            };
            (Check::cut(n, family, base, i, edge), output)
        }
    };
    let report = ctx.run_check(&check)?;
    write_out(output.out.as_deref(), &emit_report(&report, output.format))?;
    Ok(if report.pass { EXIT_PASS } else { EXIT_FAIL })
}

fn write_out(path: Option<&Path>, bytes: &[u8]) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, bytes).map_err(|e| CliError::io(p, e)),
        None => std::io::stdout().write_all(bytes).map_err(|e| CliError::io("<stdout>", e)),
    }
}

fn generate(n: u32, format: GraphFormat, out: Option<&Path>) -> Result<i32, CliError> {
    let cube = AugCube::build(Dimension::new(n)?)?;
    let bytes = export(cube.require_graph()?, format);
    write_out(out, &bytes)?;
    Ok(EXIT_PASS)
}

fn run_all(ctx: &Context, dir: &Path) -> Result<i32, CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let mut entries = Vec::new();
    let mut all_pass = true;
    for check in acceptance_checks() {
        let slug = check.slug();
        let file = format!("{slug}.json");
        let report = ctx.run_check(&check)?;
        fs::write(dir.join(&file), emit_report(&report, ReportFormat::Structured))
            .map_err(|e| CliError::io(dir.join(&file), e))?;
        println!("{} {slug} ({} ms)", if report.pass { "PASS" } else { "FAIL" }, report.runtime_ms);
        all_pass &= report.pass;
        entries.push(json!({
            "name": check.name(),
            "params": check.params(),
            "file": file,
            "pass": report.pass,
            "digest": report.digest(),
        }));
    }
    let index = json!({
        "schema_version": SCHEMA_VERSION,
        "pass": all_pass,
        "checks": entries,
    });
    let mut text = serde_json::to_string_pretty(&index).expect("index serializes");
    text.push('\n');
    let path = dir.join("index.json");
    fs::write(&path, text).map_err(|e| CliError::io(&path, e))?;
    Ok(if all_pass { EXIT_PASS } else { EXIT_FAIL })
}
