//! Report emission: a flat CSV (one row per parameter tuple) and a JSON
//! mirror carrying full diagnostics. Output is a pure function of the
//! config, so reruns are byte-identical.

use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::experiments::config::ExperimentConfig;
use crate::experiments::ledger::ConstantsLedger;

pub const CSV_HEADER: &str =
    "experiment,p,q,kernel_id,lhs,rhs,ratio,tolerance,pass,grid_M,grid_R,seed";

/// One CSV row. `lhs`/`rhs`/`ratio` carry experiment-specific semantics
/// (documented per experiment in the JSON diagnostics).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Row {
    pub experiment: String,
    pub p: Option<f64>,
    pub q: Option<f64>,
    pub kernel_id: String,
    pub lhs: f64,
    pub rhs: f64,
    pub ratio: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub grid_m: usize,
    pub grid_r: usize,
    pub seed: u64,
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(|x| format!("{x:.6}")).unwrap_or_default()
}

fn fmt_val(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.12e}")
    } else {
        format!("{v}")
    }
}

impl Row {
    fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.experiment,
            fmt_opt(self.p),
            fmt_opt(self.q),
            self.kernel_id,
            fmt_val(self.lhs),
            fmt_val(self.rhs),
            fmt_val(self.ratio),
            fmt_val(self.tolerance),
            self.pass,
            self.grid_m,
            self.grid_r,
            self.seed
        )
    }
}

/// Full experiment outcome.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub config: ExperimentConfig,
    pub rows: Vec<Row>,
    pub all_pass: bool,
    /// Ledger snapshot used by ledger-conditional checks, when any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ledger: Option<ConstantsLedger>,
    /// Free-form per-experiment diagnostics (deterministic ordering).
    pub notes: Vec<String>,
}

impl ExperimentReport {
    pub fn new(experiment: &str, config: ExperimentConfig) -> Self {
        Self {
            experiment: experiment.to_string(),
            config,
            rows: Vec::new(),
            all_pass: true,
            ledger: None,
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Row) {
        self.all_pass &= row.pass;
        self.rows.push(row);
    }

    pub fn csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.to_csv());
            out.push('\n');
        }
        out
    }

    pub fn json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Writes `<experiment>.csv` and `<experiment>.json` under `dir`.
    pub fn write_files(&self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir)?;
        let mut csv = std::fs::File::create(dir.join(format!("{}.csv", self.experiment)))?;
        csv.write_all(self.csv().as_bytes())?;
        let mut json = std::fs::File::create(dir.join(format!("{}.json", self.experiment)))?;
        json.write_all(self.json()?.as_bytes())?;
        Ok(())
    }
}

/// Machine-readable failure record for nonzero exits.
#[derive(Debug, Serialize)]
pub struct FailureRecord {
    pub experiment: String,
    pub failed_rows: Vec<Row>,
    pub message: String,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_row() -> Row {
        Row {
            experiment: "demo".into(),
            p: Some(2.0),
            q: None,
            kernel_id: "k0".into(),
            lhs: 1.0,
            rhs: 2.0,
            ratio: 0.5,
            tolerance: 1e-8,
            pass: true,
            grid_m: 256,
            grid_r: 64,
            seed: 7,
        }
    }

    #[test]
    fn csv_has_fixed_column_count() {
        let mut report = ExperimentReport::new("demo", ExperimentConfig::named("demo"));
        report.push(sample_row());
        let csv = report.csv();
        let mut lines = csv.lines();
        let header = lines.next().unwrap();
        assert_eq!(header.split(',').count(), 12);
        let row = lines.next().unwrap();
        assert_eq!(row.split(',').count(), 12);
        assert!(row.starts_with("demo,2.000000,,k0,"));
    }

    #[test]
    fn pass_flag_aggregates() {
        let mut report = ExperimentReport::new("demo", ExperimentConfig::named("demo"));
        report.push(sample_row());
        assert!(report.all_pass);
        let mut bad = sample_row();
        bad.pass = false;
        report.push(bad);
        assert!(!report.all_pass);
    }

    #[test]
    fn json_roundtrip() {
        let mut report = ExperimentReport::new("demo", ExperimentConfig::named("demo"));
        report.push(sample_row());
        let text = report.json().unwrap();
        let back: ExperimentReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back.rows.len(), 1);
        assert_eq!(back.experiment, "demo");
    }
}
