use super::{DenoiseReport, IcmConfig};
use crate::error::Result;
use crate::image::SpinImage;
use crate::metrics::EnergyTrace;
use crate::model::{energy, local_delta, EnergyParams};
use crate::scalar::Scalar;

/// Greedy restoration: starting from `y`, keep a single-pixel flip only if it
/// strictly lowers the energy. Stops after `k_max` sweeps or after the first
/// sweep that keeps no flip.
pub fn denoise_icm<T: Scalar>(
    y: &SpinImage,
    params: &EnergyParams<T>,
    cfg: &IcmConfig,
) -> Result<DenoiseReport<T>> {
    denoise_icm_observed(y, params, cfg, |_, _, _| {})
}

/// Like [`denoise_icm`], calling `observer(sweep, state, energy)` at every
/// sweep boundary, starting with sweep 0 for the initial state.
pub fn denoise_icm_observed<T: Scalar>(
    y: &SpinImage,
    params: &EnergyParams<T>,
    cfg: &IcmConfig,
    mut observer: impl FnMut(usize, &SpinImage, T),
) -> Result<DenoiseReport<T>> {
    params.validate()?;
    cfg.validate()?;

    let mut x = y.clone();
    let mut current = energy(&x, y, params)?;
    let mut best = current;
    let mut trace = EnergyTrace::new();
    trace.push_next(current);
    observer(0, &x, current);

    let mut flips_accepted = 0u64;
    let mut sweeps_run = 0;
    for k in 1..=cfg.k_max {
        let mut kept = 0u64;
        for i in 0..x.len() {
            let e1 = current;
            let e2 = e1 + local_delta(&x, y, i, params);
            if e1 > e2 {
                x.flip(i);
                current = e2;
                kept += 1;
                if e2 < best {
                    best = e2;
                }
            }
        }
        flips_accepted += kept;
        sweeps_run = k;
        trace.push_next(current);
        observer(k, &x, current);
        if kept == 0 {
            break;
        }
    }

    Ok(DenoiseReport {
        restored: x,
        final_energy: current,
        best_energy: best,
        trace,
        sweeps_run,
        flips_accepted,
    })
}
