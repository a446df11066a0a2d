//! Binary image restoration by minimizing an Ising energy.
//!
//! A noisy black-and-white image `y` is modelled as a field of ±1 spins. The
//! restored image `x` minimizes
//!
//! ```text
//! E(x, y) = h * sum_i x_i  -  beta * sum_{i~j} x_i x_j  -  eta * sum_i x_i y_i
//! ```
//!
//! over 4-adjacent pairs `i~j`. Two minimizers are provided: iterated
//! conditional modes ([`denoise_icm`]) and simulated annealing
//! ([`denoise_sa`]); [`oracle`] gives exhaustive ground truth for tiny images.
//!
//! Numeric code is generic over [`Scalar`] (`f32` or `f64`); the `*64`
//! aliases below fix it to `f64`.

pub mod error;
pub mod glyphs;
pub mod image;
pub mod metrics;
pub mod model;
pub mod noise;
pub mod optimize;
pub mod oracle;
pub mod pbm;
pub mod report;
pub mod rng;
pub mod scalar;

pub use error::{Error, Result};
pub use glyphs::glyph_image;
pub use image::{SpinImage, BLACK, WHITE};
pub use metrics::{agreement_percent, disagreement_count, EnergyTrace, TraceSample};
pub use model::{energy, flip_delta, neighbors, pair_count, spin_stats, EnergyParams, SpinStats};
pub use noise::{corrupt, corrupt_counted, Corrupted, NoiseSpec};
pub use optimize::{
    acceptance_probability, denoise_icm, denoise_icm_observed, denoise_sa, denoise_sa_observed,
    temperature, AnnealConfig, DenoiseReport, IcmConfig, DEFAULT_TEMPERATURE_SCALE,
};
pub use oracle::{exhaustive_minimize, exhaustive_minimize_naive, is_local_minimum, OracleResult};
pub use pbm::{load_pbm, save_pbm, PbmFormat};
pub use report::{parse_trace_csv, write_trace_csv, ParamsSummary, RunSummary};
pub use scalar::Scalar;

pub type EnergyParams64 = EnergyParams<f64>;
pub type EnergyParams32 = EnergyParams<f32>;
pub type AnnealConfig64 = AnnealConfig<f64>;
pub type AnnealConfig32 = AnnealConfig<f32>;
pub type DenoiseReport64 = DenoiseReport<f64>;
pub type DenoiseReport32 = DenoiseReport<f32>;
pub type EnergyTrace64 = EnergyTrace<f64>;
pub type OracleResult64 = OracleResult<f64>;

/// Coefficients used in the reference experiment: `h = 0`, `beta = 1e-4`,
/// `eta = 2.1e-4`.
pub fn reference_params() -> EnergyParams64 {
    EnergyParams {
        h: 0.0,
        beta: 1e-4,
        eta: 2.1e-4,
    }
}
