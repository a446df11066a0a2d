//! End-to-end comparison: clean -> noisy -> ICM and SA restorations.

use std::fs;
use std::thread;

use anyhow::{anyhow, bail, Context, Result};
use mrf_denoise::{
    agreement_percent, corrupt_counted, glyph_image, write_trace_csv, AnnealConfig64,
    DenoiseReport64, EnergyParams64, NoiseSpec, RunSummary, SpinImage,
};
use serde::Serialize;

use crate::commands::{read_image, run_method, write_bytes, write_image};
use crate::{ExperimentArgs, Method};

pub fn parse_size(s: &str) -> Result<(usize, usize), String> {
    let (w, h) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("expected WIDTHxHEIGHT, got {s:?}"))?;
    let dim = |t: &str| match t.trim().parse::<usize>() {
        Ok(0) | Err(_) => Err(format!("invalid dimension {t:?} in {s:?}")),
        Ok(v) => Ok(v),
    };
    Ok((dim(w)?, dim(h)?))
}

#[derive(Debug, Serialize)]
struct ImageInfo {
    source: String,
    width: usize,
    height: usize,
}

#[derive(Debug, Serialize)]
struct Replica {
    noise_seed: u64,
    sa_seed: u64,
    flipped: usize,
    noisy_agreement_percent: f64,
    icm: RunSummary,
    sa: RunSummary,
}

#[derive(Debug, Serialize)]
struct ExperimentSummary {
    image: ImageInfo,
    noise_probability: f64,
    replicas: Vec<Replica>,
    median_icm_agreement_percent: f64,
    median_sa_agreement_percent: f64,
}

struct ReplicaRun {
    summary: Replica,
    noisy: SpinImage,
    icm: DenoiseReport64,
    sa: DenoiseReport64,
}

fn run_replica(
    clean: &SpinImage,
    args: &ExperimentArgs,
    params: &EnergyParams64,
    k_max: usize,
    offset: u64,
) -> Result<ReplicaRun> {
    let noise_seed = args.noise_seed.wrapping_add(offset);
    let sa_seed = args.sa_seed.wrapping_add(offset);
    let noisy = corrupt_counted(clean, &NoiseSpec::new(args.prob, noise_seed)?);
    let anneal = AnnealConfig64::new(k_max, sa_seed)
        .with_temperature_scale(args.temperature_scale)
        .with_track_best(args.track_best);

    let icm = run_method(Method::Icm, &noisy.image, params, k_max, &anneal)?;
    let sa = run_method(Method::Sa, &noisy.image, params, k_max, &anneal)?;
    let summarize = |method: Method, seed, report| {
        RunSummary::from_report(
            method.name(),
            params,
            k_max,
            seed,
            report,
            &noisy.image,
            Some(clean),
        )
    };
    let summary = Replica {
        noise_seed,
        sa_seed,
        flipped: noisy.flipped,
        noisy_agreement_percent: agreement_percent(&noisy.image, clean)?,
        icm: summarize(Method::Icm, None, &icm)?,
        sa: summarize(Method::Sa, Some(sa_seed), &sa)?,
    };
    Ok(ReplicaRun {
        summary,
        noisy: noisy.image,
        icm,
        sa,
    })
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let n = xs.len();
    if n % 2 == 1 {
        xs[n / 2]
    } else {
        (xs[n / 2 - 1] + xs[n / 2]) / 2.0
    }
}

pub fn run(args: &ExperimentArgs) -> Result<()> {
    let (clean, source) = match (&args.input, args.generate) {
        (Some(path), _) => (read_image(path)?, path.display().to_string()),
        (None, Some((w, h))) => (glyph_image(w, h)?, format!("generated {w}x{h}")),
        (None, None) => bail!("either --in or --generate is required"),
    };
    let params = args.energy.params()?;
    let k_max = usize::try_from(args.k_max)?;
    fs::create_dir_all(&args.out_dir)
        .with_context(|| format!("creating {}", args.out_dir.display()))?;

    // Replicas are independent; results are joined back in seed order.
    let runs: Vec<ReplicaRun> = thread::scope(|scope| {
        let handles: Vec<_> = (0..args.replicas)
            .map(|r| {
                let (clean, params) = (&clean, &params);
                scope.spawn(move || run_replica(clean, args, params, k_max, r))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().map_err(|_| anyhow!("replica thread panicked"))?)
            .collect::<Result<_>>()
    })?;

    let format = args.format.into();
    let dir = &args.out_dir;
    let first = &runs[0];
    write_image(&dir.join("original.pbm"), &clean, format)?;
    write_image(&dir.join("noisy.pbm"), &first.noisy, format)?;
    write_image(&dir.join("icm.pbm"), &first.icm.restored, format)?;
    write_image(&dir.join("sa.pbm"), &first.sa.restored, format)?;
    write_bytes(
        &dir.join("icm_trace.csv"),
        write_trace_csv(&first.icm.trace),
    )?;
    write_bytes(&dir.join("sa_trace.csv"), write_trace_csv(&first.sa.trace))?;

    let replicas: Vec<Replica> = runs.into_iter().map(|r| r.summary).collect();
    let pick = |f: fn(&Replica) -> Option<f64>| median(replicas.iter().filter_map(f).collect());
    let summary = ExperimentSummary {
        image: ImageInfo {
            source,
            width: clean.width(),
            height: clean.height(),
        },
        noise_probability: args.prob,
        median_icm_agreement_percent: pick(|r| r.icm.agreement_vs_original_percent),
        median_sa_agreement_percent: pick(|r| r.sa.agreement_vs_original_percent),
        replicas,
    };
    write_bytes(
        &dir.join("summary.json"),
        serde_json::to_string_pretty(&summary)? + "\n",
    )?;

    println!(
        "{:>8} {:>10} {:>10} {:>10}",
        "replica", "noisy %", "icm %", "sa %"
    );
    for (i, r) in summary.replicas.iter().enumerate() {
        println!(
            "{:>8} {:>10.4} {:>10.4} {:>10.4}",
            i,
            r.noisy_agreement_percent,
            r.icm.agreement_vs_original_percent.unwrap_or(f64::NAN),
            r.sa.agreement_vs_original_percent.unwrap_or(f64::NAN),
        );
    }
    Ok(())
}
