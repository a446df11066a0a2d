use super::{metropolis, schedule, AnnealConfig, DenoiseReport};
use crate::error::Result;
use crate::image::SpinImage;
use crate::metrics::EnergyTrace;
use crate::model::{energy, local_delta, EnergyParams};
use crate::rng::UnitStream;
use crate::scalar::Scalar;

/// Simulated annealing from `y`: on sweep `k` the temperature is
/// `temperature(k, k_max, scale)` and each pixel's flip is kept when the
/// acceptance probability exceeds a fresh uniform draw `q`.
///
/// Exactly one draw is consumed per pixel visit, in row-major order, so the
/// result is a pure function of the inputs and `cfg.seed`.
pub fn denoise_sa<T: Scalar>(
    y: &SpinImage,
    params: &EnergyParams<T>,
    cfg: &AnnealConfig<T>,
) -> Result<DenoiseReport<T>> {
    denoise_sa_observed(y, params, cfg, |_, _, _| {})
}

/// Like [`denoise_sa`], calling `observer(sweep, state, energy)` at every
/// sweep boundary, starting with sweep 0 for the initial state.
pub fn denoise_sa_observed<T: Scalar>(
    y: &SpinImage,
    params: &EnergyParams<T>,
    cfg: &AnnealConfig<T>,
    observer: impl FnMut(usize, &SpinImage, T),
) -> Result<DenoiseReport<T>> {
    params.validate()?;
    cfg.validate()?;
    let scale = cfg.temperature_scale;
    let k_max = cfg.k_max;
    anneal(
        y,
        params,
        cfg,
        |k| schedule(k, k_max, scale),
        metropolis,
        observer,
    )
}

pub(crate) fn anneal<T: Scalar>(
    y: &SpinImage,
    params: &EnergyParams<T>,
    cfg: &AnnealConfig<T>,
    temperature_at: impl Fn(usize) -> T,
    accept: impl Fn(T, T, T) -> T,
    mut observer: impl FnMut(usize, &SpinImage, T),
) -> Result<DenoiseReport<T>> {
    let mut x = y.clone();
    let mut current = energy(&x, y, params)?;
    let mut best = current;
    let mut trace = EnergyTrace::new();
    trace.push_next(current);
    observer(0, &x, current);

    // Best state is materialized lazily: `pending` holds the flips made since
    // `best_state` was last brought up to date.
    let mut best_state = cfg.track_best.then(|| x.clone());
    let mut pending: Vec<usize> = Vec::new();

    let mut stream = UnitStream::new(cfg.seed);
    let mut flips_accepted = 0u64;
    for k in 1..=cfg.k_max {
        let t = temperature_at(k);
        for i in 0..x.len() {
            let e1 = current;
            let e2 = e1 + local_delta(&x, y, i, params);
            let p = accept(e1, e2, t);
            let q = T::from_f64_lossy(stream.next_unit());
            if p > q {
                x.flip(i);
                current = e2;
                flips_accepted += 1;
                if let Some(state) = best_state.as_mut() {
                    pending.push(i);
                    if e2 < best {
                        for j in pending.drain(..) {
                            state.flip(j);
                        }
                    }
                }
                if e2 < best {
                    best = e2;
                }
            }
        }
        trace.push_next(current);
        observer(k, &x, current);
    }

    let restored = best_state.unwrap_or(x);
    Ok(DenoiseReport {
        restored,
        final_energy: current,
        best_energy: best,
        trace,
        sweeps_run: cfg.k_max,
        flips_accepted,
    })
}
