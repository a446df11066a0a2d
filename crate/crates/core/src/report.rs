//! Text serializations of run results: the energy trace as CSV and the run
//! summary as JSON.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::image::SpinImage;
use crate::metrics::{agreement_percent, EnergyTrace, TraceSample};
use crate::model::EnergyParams;
use crate::optimize::DenoiseReport;
use crate::scalar::Scalar;

pub const TRACE_HEADER: &str = "sweep,energy";

/// Renders `sweep,energy` rows. Energies use the shortest representation
/// that parses back to the same value, so no precision is lost.
pub fn write_trace_csv<T: Scalar>(trace: &EnergyTrace<T>) -> String {
    let mut out = String::with_capacity(16 * (trace.len() + 1));
    out.push_str(TRACE_HEADER);
    out.push('\n');
    for s in trace.samples() {
        let _ = writeln!(out, "{},{}", s.sweep, s.energy);
    }
    out
}

pub fn parse_trace_csv(text: &str) -> Result<EnergyTrace<f64>> {
    let mut lines = text.lines();
    if lines.next().map(str::trim) != Some(TRACE_HEADER) {
        return Err(Error::parse(0, "missing `sweep,energy` header"));
    }
    let mut samples = Vec::new();
    let mut offset = TRACE_HEADER.len() + 1;
    for line in lines {
        let bad = || Error::parse(offset, format!("malformed trace row {line:?}"));
        let (sweep, energy) = line.trim().split_once(',').ok_or_else(bad)?;
        samples.push(TraceSample {
            sweep: sweep.parse().map_err(|_| bad())?,
            energy: energy.parse().map_err(|_| bad())?,
        });
        offset += line.len() + 1;
    }
    EnergyTrace::from_samples(samples)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamsSummary {
    pub h: f64,
    pub beta: f64,
    pub eta: f64,
}

impl<T: Scalar> From<&EnergyParams<T>> for ParamsSummary {
    fn from(p: &EnergyParams<T>) -> Self {
        Self {
            h: p.h.to_f64_lossy(),
            beta: p.beta.to_f64_lossy(),
            eta: p.eta.to_f64_lossy(),
        }
    }
}

/// One optimizer run, as written to `summary.json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunSummary {
    pub method: String,
    pub params: ParamsSummary,
    pub k_max: usize,
    /// Acceptance seed; `null` for deterministic methods.
    pub seed: Option<u64>,
    pub final_energy: f64,
    pub best_energy: f64,
    /// `null` when no reference image was supplied.
    pub agreement_vs_original_percent: Option<f64>,
    pub agreement_vs_noisy_percent: f64,
    pub flips_accepted: u64,
    pub sweeps_run: usize,
}

impl RunSummary {
    #[allow(clippy::too_many_arguments)]
    pub fn from_report<T: Scalar>(
        method: &str,
        params: &EnergyParams<T>,
        k_max: usize,
        seed: Option<u64>,
        report: &DenoiseReport<T>,
        noisy: &SpinImage,
        original: Option<&SpinImage>,
    ) -> Result<Self> {
        Ok(Self {
            method: method.to_owned(),
            params: params.into(),
            k_max,
            seed,
            final_energy: report.final_energy.to_f64_lossy(),
            best_energy: report.best_energy.to_f64_lossy(),
            agreement_vs_original_percent: original
                .map(|o| agreement_percent(&report.restored, o))
                .transpose()?,
            agreement_vs_noisy_percent: agreement_percent(&report.restored, noisy)?,
            flips_accepted: report.flips_accepted,
            sweeps_run: report.sweeps_run,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary is serializable") + "\n"
    }
}
