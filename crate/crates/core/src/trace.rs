//! Per-iteration records and their export as CSV / JSON series.
//!
//! CSV header: `iteration,restart,case,direction,streak,output,error,learning_rate,w1..wn`.
//! `output` and `error` describe the weights *before* the update; the weight
//! columns are the weights *after* it.

use std::fs::File;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::equation::WeightVector;
use crate::error::{Error, Result};
use crate::solver::{Case, SolveResult};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub iteration: u64,
    pub restart_index: u32,
    pub weights: WeightVector,
    pub output: u128,
    pub error: i128,
    pub direction: i8,
    pub case_applied: Case,
    pub streak: u64,
    pub deltas: Vec<i128>,
    pub learning_rate: u128,
}

pub fn error_series(trace: &[TraceRecord]) -> Vec<(u64, i128)> {
    trace.iter().map(|r| (r.iteration, r.error)).collect()
}

pub fn learning_rate_series(trace: &[TraceRecord]) -> Vec<(u64, u128)> {
    trace
        .iter()
        .map(|r| (r.iteration, r.learning_rate))
        .collect()
}

/// Weight trajectory, one row per iteration (post-update weights).
pub fn weight_series(trace: &[TraceRecord]) -> Vec<(u64, Vec<u64>)> {
    trace
        .iter()
        .map(|r| (r.iteration, r.weights.as_slice().to_vec()))
        .collect()
}

pub fn csv_header(n: usize) -> Vec<String> {
    let fixed = [
        "iteration",
        "restart",
        "case",
        "direction",
        "streak",
        "output",
        "error",
        "learning_rate",
    ];
    fixed
        .iter()
        .map(|s| s.to_string())
        .chain((1..=n).map(|i| format!("w{i}")))
        .collect()
}

/// Writes the trace as CSV. `n` is the number of variables; it fixes the
/// header even when the trace is empty.
pub fn write_csv<W: Write>(trace: &[TraceRecord], n: usize, out: W) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(csv_header(n))?;
    for r in trace {
        let mut row = vec![
            r.iteration.to_string(),
            r.restart_index.to_string(),
            r.case_applied.to_string(),
            r.direction.to_string(),
            r.streak.to_string(),
            r.output.to_string(),
            r.error.to_string(),
            r.learning_rate.to_string(),
        ];
        row.extend(r.weights.as_slice().iter().map(u64::to_string));
        w.write_record(&row)?;
    }
    w.flush()
}

pub fn export_csv(trace: &[TraceRecord], n: usize, path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|e| io_error(path, e))?;
    write_csv(trace, n, file).map_err(|e| io_error(path, e))
}

pub fn to_json(result: &SolveResult) -> String {
    serde_json::to_string_pretty(result).expect("SolveResult serializes")
}

pub fn from_json(text: &str) -> serde_json::Result<SolveResult> {
    serde_json::from_str(text)
}

pub fn export_json(result: &SolveResult, path: &Path) -> Result<()> {
    let mut text = to_json(result);
    text.push('\n');
    std::fs::write(path, text).map_err(|e| io_error(path, e))
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    }
}
