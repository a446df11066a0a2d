//! Single-flip minimizers of the Ising energy: iterated conditional modes
//! and simulated annealing.
//!
//! Both visit pixels in row-major order, one sweep per outer iteration, and
//! evaluate each candidate flip locally with [`flip_delta`](crate::model::flip_delta)
//! instead of recomputing the whole energy.

mod anneal;
mod icm;

pub use anneal::{denoise_sa, denoise_sa_observed};
pub use icm::{denoise_icm, denoise_icm_observed};

use crate::error::{Error, Result};
use crate::image::SpinImage;
use crate::metrics::EnergyTrace;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IcmConfig {
    pub k_max: usize,
}

impl IcmConfig {
    pub fn new(k_max: usize) -> Result<Self> {
        let cfg = Self { k_max };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.k_max == 0 {
            return Err(Error::InvalidConfig("k_max must be at least 1".into()));
        }
        Ok(())
    }
}

impl Default for IcmConfig {
    fn default() -> Self {
        Self { k_max: 30 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnnealConfig<T> {
    /// Number of sweeps.
    pub k_max: usize,
    /// Seed of the acceptance stream (one uniform draw per pixel visit).
    pub seed: u64,
    /// Multiplier of the `1/k - 1/k_max` schedule.
    pub temperature_scale: T,
    /// Return the lowest-energy state seen instead of the final one.
    pub track_best: bool,
}

impl<T: Scalar> AnnealConfig<T> {
    pub fn new(k_max: usize, seed: u64) -> Self {
        Self {
            k_max,
            seed,
            ..Self::default()
        }
    }

    pub fn with_temperature_scale(mut self, scale: T) -> Self {
        self.temperature_scale = scale;
        self
    }

    pub fn with_track_best(mut self, track_best: bool) -> Self {
        self.track_best = track_best;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.k_max == 0 {
            return Err(Error::InvalidConfig("k_max must be at least 1".into()));
        }
        if !(self.temperature_scale > T::zero() && self.temperature_scale.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "temperature_scale must be positive and finite, got {}",
                self.temperature_scale
            )));
        }
        Ok(())
    }
}

impl<T: Scalar> Default for AnnealConfig<T> {
    fn default() -> Self {
        Self {
            k_max: 30,
            seed: 0,
            temperature_scale: T::from_f64_lossy(DEFAULT_TEMPERATURE_SCALE),
            track_best: false,
        }
    }
}

/// Default multiplier of the annealing schedule.
pub const DEFAULT_TEMPERATURE_SCALE: f64 = 1.0 / 500.0;

#[derive(Debug, Clone, PartialEq)]
pub struct DenoiseReport<T> {
    pub restored: SpinImage,
    /// Energy of the state the run ended in (not necessarily `restored` when
    /// best-state tracking is on).
    pub final_energy: T,
    /// Lowest energy reached at any point, including the initial state.
    pub best_energy: T,
    /// Initial energy plus one sample per sweep.
    pub trace: EnergyTrace<T>,
    pub sweeps_run: usize,
    pub flips_accepted: u64,
}

/// Annealing temperature for sweep `k` of `k_max`: `scale * (1/k - 1/k_max)`.
///
/// Strictly decreasing in `k` and exactly zero on the last sweep.
pub fn temperature<T: Scalar>(k: usize, k_max: usize, scale: T) -> Result<T> {
    if k == 0 || k > k_max {
        return Err(Error::ScheduleStep { k, k_max });
    }
    Ok(schedule(k, k_max, scale))
}

#[inline]
pub(crate) fn schedule<T: Scalar>(k: usize, k_max: usize, scale: T) -> T {
    let inv = |n: usize| T::one() / T::from_usize(n).unwrap_or_else(T::nan);
    scale * (inv(k) - inv(k_max))
}

/// Probability of moving from energy `e1` to `e2` at temperature `t`:
/// 1 for a strict decrease, `exp((e1 - e2) / t)` otherwise.
///
/// At `t = 0` the rule degenerates to 1 when `e2 <= e1` and 0 when `e2 > e1`.
pub fn acceptance_probability<T: Scalar>(e1: T, e2: T, t: T) -> Result<T> {
    if t.is_nan() || t < T::zero() {
        return Err(Error::NegativeTemperature(t.to_f64_lossy()));
    }
    Ok(metropolis(e1, e2, t))
}

#[inline]
pub(crate) fn metropolis<T: Scalar>(e1: T, e2: T, t: T) -> T {
    if e1 > e2 {
        T::one()
    } else if t == T::zero() {
        if e2 <= e1 {
            T::one()
        } else {
            T::zero()
        }
    } else {
        ((e1 - e2) / t).exp()
    }
}
