use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use tsa_core::stats::Summary;

use crate::config::ExperimentConfig;
use crate::error::{BenchError, Result};

/// Everything one `run` produced, as written to `results.json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultsFile {
    pub config: ExperimentConfig,
    pub functions: Vec<FunctionResults>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FunctionResults {
    pub function_id: String,
    pub name: String,
    pub dimension: usize,
    pub max_fe: u64,
    pub summary: Summary,
    pub runs: Vec<RunRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub run: u32,
    pub seed: u64,
    pub best_fitness: f64,
    pub used_fe: u64,
    pub iterations: u64,
    pub wall_time: f64,
    pub best_position: Vec<f64>,
}

/// One line of `summary.csv`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub function_id: String,
    pub mean: f64,
    pub std: f64,
    pub best: f64,
    pub runs: usize,
    pub max_fe: u64,
    /// Seconds summed over the runs.
    pub wall_time: f64,
}

impl FunctionResults {
    pub fn best_values(&self) -> Vec<f64> {
        self.runs.iter().map(|r| r.best_fitness).collect()
    }

    pub fn report_row(&self) -> ReportRow {
        ReportRow {
            function_id: self.function_id.clone(),
            mean: self.summary.mean,
            std: self.summary.std,
            best: self.summary.best,
            runs: self.runs.len(),
            max_fe: self.max_fe,
            wall_time: self.runs.iter().map(|r| r.wall_time).sum(),
        }
    }
}

impl ResultsFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| BenchError::io(path, e))?;
        serde_json::from_str(&text).map_err(|e| BenchError::Format {
            path: path.to_path_buf(),
            message: format!("not a results file: {e}"),
        })
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self).expect("results serialize");
        fs::write(path, text).map_err(|e| BenchError::io(path, e))
    }

    pub fn function(&self, id: &str) -> Option<&FunctionResults> {
        self.functions.iter().find(|f| f.function_id == id)
    }

    pub fn function_ids(&self) -> Vec<&str> {
        self.functions.iter().map(|f| f.function_id.as_str()).collect()
    }
}

pub fn read_summary(path: &Path) -> Result<Vec<ReportRow>> {
    let mut reader = csv::Reader::from_path(path).map_err(|e| csv_error(path, e))?;
    reader
        .deserialize()
        .collect::<std::result::Result<Vec<ReportRow>, _>>()
        .map_err(|e| csv_error(path, e))
}

pub fn write_summary(path: &Path, rows: &[ReportRow]) -> Result<()> {
    let mut writer = csv::Writer::from_path(path).map_err(|e| csv_error(path, e))?;
    for row in rows {
        writer.serialize(row).map_err(|e| csv_error(path, e))?;
    }
    writer.flush().map_err(|e| BenchError::io(path, e))
}

pub(crate) fn csv_error(path: &Path, e: csv::Error) -> BenchError {
    if e.is_io_error() {
        match e.into_kind() {
            csv::ErrorKind::Io(io) => BenchError::io(path, io),
            _ => unreachable!(),
        }
    } else {
        BenchError::Format {
            path: path.to_path_buf(),
            message: e.to_string(),
        }
    }
}
