use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use mrf_denoise::{
    agreement_percent, corrupt_counted, denoise_icm, denoise_sa, disagreement_count,
    exhaustive_minimize, load_pbm, save_pbm, write_trace_csv, AnnealConfig64, DenoiseReport64,
    EnergyParams64, IcmConfig, NoiseSpec, PbmFormat, RunSummary, SpinImage,
};
use serde::Serialize;

use crate::{CorruptArgs, DenoiseArgs, EnergyArgs, EvaluateArgs, Method, OracleArgs};

pub fn read_image(path: &Path) -> Result<SpinImage> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    load_pbm(&bytes).with_context(|| format!("decoding {}", path.display()))
}

pub fn write_bytes(path: &Path, bytes: impl AsRef<[u8]>) -> Result<()> {
    fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))
}

pub fn write_image(path: &Path, image: &SpinImage, format: PbmFormat) -> Result<()> {
    write_bytes(path, save_pbm(image, format))
}

impl EnergyArgs {
    pub fn params(&self) -> Result<EnergyParams64> {
        Ok(EnergyParams64::new(self.h, self.beta, self.eta)?)
    }
}

/// Runs one optimizer and packages the outcome.
pub fn run_method(
    method: Method,
    noisy: &SpinImage,
    params: &EnergyParams64,
    k_max: usize,
    anneal: &AnnealConfig64,
) -> Result<DenoiseReport64> {
    Ok(match method {
        Method::Icm => denoise_icm(noisy, params, &IcmConfig::new(k_max)?)?,
        Method::Sa => denoise_sa(noisy, params, anneal)?,
    })
}

pub fn corrupt(args: &CorruptArgs) -> Result<()> {
    let clean = read_image(&args.input)?;
    let out = corrupt_counted(&clean, &NoiseSpec::new(args.prob, args.seed)?);
    write_image(&args.out, &out.image, args.format.into())?;
    println!(
        "flipped {} of {} pixels (rate {:.6})",
        out.flipped,
        clean.len(),
        out.flipped as f64 / clean.len() as f64
    );
    Ok(())
}

pub fn denoise(args: &DenoiseArgs) -> Result<()> {
    let noisy = read_image(&args.input)?;
    let reference = args.reference.as_deref().map(read_image).transpose()?;
    let params = args.energy.params()?;
    let k_max = usize::try_from(args.k_max)?;
    let anneal = AnnealConfig64::new(k_max, args.seed)
        .with_temperature_scale(args.temperature_scale)
        .with_track_best(args.track_best);

    let report = run_method(args.method, &noisy, &params, k_max, &anneal)?;
    let seed = (args.method == Method::Sa).then_some(args.seed);
    let summary = RunSummary::from_report(
        args.method.name(),
        &params,
        k_max,
        seed,
        &report,
        &noisy,
        reference.as_ref(),
    )?;

    write_image(&args.out, &report.restored, args.format.into())?;
    if let Some(path) = &args.trace {
        write_bytes(path, write_trace_csv(&report.trace))?;
    }
    let summary_path = args
        .summary
        .clone()
        .unwrap_or_else(|| args.out.with_extension("json"));
    write_bytes(&summary_path, summary.to_json())?;

    println!(
        "{}: energy {} -> {} in {} sweeps, {} flips",
        args.method.name(),
        report.trace.samples()[0].energy,
        report.final_energy,
        report.sweeps_run,
        report.flips_accepted
    );
    if let Some(a) = summary.agreement_vs_original_percent {
        println!("agreement with reference: {a:.4}%");
    }
    Ok(())
}

#[derive(Serialize)]
struct Evaluation {
    width: usize,
    height: usize,
    disagreement_count: usize,
    agreement_percent: f64,
}

pub fn evaluate(args: &EvaluateArgs) -> Result<()> {
    let a = read_image(&args.input)?;
    let b = read_image(&args.reference)?;
    let eval = Evaluation {
        width: a.width(),
        height: a.height(),
        disagreement_count: disagreement_count(&a, &b)?,
        agreement_percent: agreement_percent(&a, &b)?,
    };
    if args.json {
        println!("{}", serde_json::to_string_pretty(&eval)?);
    } else {
        println!(
            "{} of {} pixels differ, agreement {:.4}%",
            eval.disagreement_count,
            a.len(),
            eval.agreement_percent
        );
    }
    Ok(())
}

#[derive(Serialize)]
struct OracleOutput {
    global_min_energy: f64,
    states_enumerated: u64,
    minimizer_count: usize,
    /// Minimizers as rows of `0`/`1` (1 = black).
    minimizers: Vec<Vec<String>>,
}

pub fn oracle(args: &OracleArgs) -> Result<()> {
    let y = read_image(&args.input)?;
    let result = exhaustive_minimize(&y, &args.energy.params()?, args.max_pixels)?;
    let rows = |x: &SpinImage| {
        x.spins()
            .chunks(x.width())
            .map(|r| r.iter().map(|&s| if s < 0 { '1' } else { '0' }).collect())
            .collect()
    };
    let out = OracleOutput {
        global_min_energy: result.global_min_energy,
        states_enumerated: result.states_enumerated,
        minimizer_count: result.argmin_images.len(),
        minimizers: result.argmin_images.iter().take(64).map(rows).collect(),
    };
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(())
}
