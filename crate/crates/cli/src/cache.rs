//! On-disk report cache, one document per check.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::json;
use sha2::{Digest, Sha256};

use crate::checks::Check;
use crate::error::CliError;
use crate::report::{emit_report, load_report, Report, ReportFormat, SCHEMA_VERSION};

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "AQCUBE_CACHE_DIR";

#[derive(Debug, Clone)]
pub struct ResultCache {
    dir: PathBuf,
}

impl ResultCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        ResultCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// Digest of the check name, its parameters and the schema version.
    pub fn key(check: &Check) -> String {
        let doc = json!({
            "name": check.name(),
            "params": check.params(),
            "schema_version": SCHEMA_VERSION,
        });
        hex::encode(Sha256::digest(doc.to_string().as_bytes()))
    }

    fn path(&self, check: &Check) -> PathBuf {
        self.dir.join(format!("{}.json", Self::key(check)))
    }

    /// A stored report for `check`. Unreadable or mismatching entries count
    /// as misses.
    pub fn get(&self, check: &Check) -> Option<Report> {
        let bytes = fs::read(self.path(check)).ok()?;
        let report = load_report(&bytes).ok()?;
        (report.check.name == check.name() && report.check.params == check.params()).then_some(report)
    }

    /// Stores `report` unless it is only an upper bound from a timed-out search.
    pub fn put(&self, check: &Check, report: &Report) -> Result<(), CliError> {
        if report.result.get("exact") == Some(&json!(false)) {
            return Ok(());
        }
        fs::create_dir_all(&self.dir).map_err(|e| CliError::io(&self.dir, e))?;
        let path = self.path(check);
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, emit_report(report, ReportFormat::Structured)).map_err(|e| CliError::io(&tmp, e))?;
        fs::rename(&tmp, &path).map_err(|e| CliError::io(&path, e))
    }
}
