//! Command-line front end for `aqcube`: checks, reports and the result cache.

pub mod app;
pub mod cache;
pub mod checks;
pub mod error;
pub mod report;

pub use app::run;
pub use checks::{acceptance_checks, Check, CutFamily};
pub use error::CliError;
pub use report::{emit_report, load_report, Report, ReportFormat};
