//! Restoration quality and the per-sweep energy series.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::image::SpinImage;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TraceSample<T> {
    pub sweep: usize,
    pub energy: T,
}

/// Energy sampled at sweep boundaries, sweep 0 being the initial state.
#[derive(Debug, Clone, PartialEq, Default, Serialize)]
#[serde(transparent)]
pub struct EnergyTrace<T> {
    samples: Vec<TraceSample<T>>,
}

impl<T: Copy> EnergyTrace<T> {
    pub fn new() -> Self {
        Self {
            samples: Vec::new(),
        }
    }

    /// Builds a trace from samples, checking that sweeps are strictly
    /// increasing from 0.
    pub fn from_samples(samples: Vec<TraceSample<T>>) -> Result<Self> {
        let mut trace = Self::new();
        for s in samples {
            trace.push(s.sweep, s.energy)?;
        }
        Ok(trace)
    }

    pub fn push(&mut self, sweep: usize, energy: T) -> Result<()> {
        let ok = match self.samples.last() {
            None => sweep == 0,
            Some(last) => sweep > last.sweep,
        };
        if !ok {
            return Err(Error::InvalidConfig(format!(
                "trace sweep {sweep} does not follow {:?}",
                self.samples.last().map(|s| s.sweep)
            )));
        }
        self.samples.push(TraceSample { sweep, energy });
        Ok(())
    }

    pub(crate) fn push_next(&mut self, energy: T) {
        let sweep = self.samples.len();
        self.samples.push(TraceSample { sweep, energy });
    }

    pub fn samples(&self) -> &[TraceSample<T>] {
        &self.samples
    }

    pub fn energies(&self) -> impl Iterator<Item = T> + '_ {
        self.samples.iter().map(|s| s.energy)
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}

/// Number of pixels where `a` and `b` differ (Hamming distance).
pub fn disagreement_count(a: &SpinImage, b: &SpinImage) -> Result<usize> {
    a.ensure_same_shape(b)?;
    Ok(a.spins()
        .iter()
        .zip(b.spins())
        .filter(|(p, q)| p != q)
        .count())
}

/// Percentage of pixels where `a` matches `b`, in `[0, 100]`.
pub fn agreement_percent(a: &SpinImage, b: &SpinImage) -> Result<f64> {
    let differ = disagreement_count(a, b)?;
    let total = a.len();
    Ok(100.0 * (total - differ) as f64 / total as f64)
}
