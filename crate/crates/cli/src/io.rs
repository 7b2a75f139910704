/*
Copyright 2026 The sdr-rs Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

//! Configuration parsing and result files.

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;

use sdr_core::experiments::{ExperimentConfig, Histogram};
use sdr_core::oracle::{ProbeTable, ReferenceSolution};
use sdr_core::solvers::RunRecord;

/// Columns of every time-series CSV, in order.
pub const RECORD_COLUMNS: [&str; 5] = ["iteration", "wall_seconds", "objective_y", "objective_ergodic", "dist_ergodic"];

/// Reads a JSON config, fills in defaults and validates it.
///
/// Unknown keys are rejected, and constraint violations name the field.
pub fn parse_config(path: &Path) -> Result<ExperimentConfig> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read config {}", path.display()))?;
    parse_config_str(&text).with_context(|| format!("invalid config {}", path.display()))
}

pub fn parse_config_str(text: &str) -> Result<ExperimentConfig> {
    let config: ExperimentConfig = serde_json::from_str(text)?;
    config.validate()?;
    Ok(config)
}

pub fn write_json(path: &Path, value: &impl Serialize) -> Result<()> {
    let mut out = BufWriter::new(File::create(path).with_context(|| format!("cannot create {}", path.display()))?);
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    out.flush()?;
    Ok(())
}

pub fn read_reference(path: &Path) -> Result<ReferenceSolution> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read reference {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("invalid reference {}", path.display()))
}

/// Writes records with the columns of [`RECORD_COLUMNS`]; a missing distance
/// is an empty field.
pub fn write_records(path: &Path, records: &[RunRecord]) -> Result<()> {
    let mut w = csv::Writer::from_path(path).with_context(|| format!("cannot create {}", path.display()))?;
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct ProbeCsvRow {
    gamma: f64,
    p_ergodic: f64,
    cesaro: f64,
    mean_dist_ergodic: f64,
    sup_norm: f64,
    divergences: usize,
    seeds: usize,
}

pub fn write_probe(path: &Path, table: &ProbeTable) -> Result<()> {
    let mut w = csv::Writer::from_path(path).with_context(|| format!("cannot create {}", path.display()))?;
    for r in &table.rows {
        w.serialize(ProbeCsvRow {
            gamma: r.gamma,
            p_ergodic: r.p_ergodic,
            cesaro: r.cesaro,
            mean_dist_ergodic: r.mean_dist_ergodic,
            sup_norm: r.sup_norm,
            divergences: r.divergences,
            seeds: r.seeds,
        })?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct HistogramCsvRow {
    lower: f64,
    upper: f64,
    init: usize,
    sdr_last: usize,
    psdr_last: usize,
}

pub fn write_histogram(path: &Path, h: &Histogram) -> Result<()> {
    let mut w = csv::Writer::from_path(path).with_context(|| format!("cannot create {}", path.display()))?;
    for k in 0..h.init.len() {
        w.serialize(HistogramCsvRow {
            lower: h.edges[k],
            upper: h.edges[k + 1],
            init: h.init[k],
            sdr_last: h.sdr_last[k],
            psdr_last: h.psdr_last[k],
        })?;
    }
    w.flush()?;
    Ok(())
}
