//! `mrf-denoise`: corrupt, restore and evaluate black-and-white PBM images.

mod commands;
mod experiment;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mrf_denoise::PbmFormat;

#[derive(Debug, Parser)]
#[command(
    name = "mrf-denoise",
    version,
    about = "Binary image denoising by Ising energy minimization"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Flip each pixel's colour independently with a given probability.
    Corrupt(CorruptArgs),
    /// Restore a noisy image with ICM or simulated annealing.
    Denoise(DenoiseArgs),
    /// Report pixel agreement between two images.
    Evaluate(EvaluateArgs),
    /// Run the full corrupt / ICM / SA comparison and write every artifact.
    Experiment(ExperimentArgs),
    /// Exhaustively minimize the energy of a tiny image.
    #[command(hide = true)]
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Icm,
    Sa,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Icm => "icm",
            Method::Sa => "sa",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// ASCII P1
    Plain,
    /// Binary P4
    Raw,
}

impl From<Format> for PbmFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Plain => PbmFormat::Plain,
            Format::Raw => PbmFormat::Raw,
        }
    }
}

fn probability(s: &str) -> Result<f64, String> {
    let p: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if (0.0..=1.0).contains(&p) {
        Ok(p)
    } else {
        Err(format!("{p} is not in [0, 1]"))
    }
}

fn non_negative(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v >= 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("{v} must be finite and non-negative"))
    }
}

fn finite(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("{v} must be finite"))
    }
}

fn positive(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("{v} must be finite and positive"))
    }
}

/// Energy coefficients; defaults are the reference experiment's values.
#[derive(Debug, Clone, Args)]
pub struct EnergyArgs {
    /// Bias coefficient h.
    #[arg(long = "h", default_value_t = 0.0, value_parser = finite, allow_hyphen_values = true)]
    pub h: f64,
    /// Pair coupling beta.
    #[arg(long, default_value_t = 1e-4, value_parser = non_negative)]
    pub beta: f64,
    /// Data fidelity eta.
    #[arg(long, default_value_t = 2.1e-4, value_parser = non_negative)]
    pub eta: f64,
}

#[derive(Debug, Args)]
pub struct CorruptArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    /// Per-pixel flip probability.
    #[arg(long, default_value_t = 0.1, value_parser = probability)]
    pub prob: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Raw)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct DenoiseArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_enum)]
    pub method: Method,
    #[command(flatten)]
    pub energy: EnergyArgs,
    /// Number of sweeps.
    #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u64).range(1..))]
    pub k_max: u64,
    /// Acceptance seed (sa only).
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Multiplier of the annealing schedule (sa only).
    #[arg(long, default_value_t = mrf_denoise::DEFAULT_TEMPERATURE_SCALE, value_parser = positive)]
    pub temperature_scale: f64,
    /// Return the lowest-energy state seen (sa only).
    #[arg(long)]
    pub track_best: bool,
    /// Clean image to report agreement against.
    #[arg(long)]
    pub reference: Option<PathBuf>,
    /// Write the per-sweep energy series as CSV.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    /// Summary JSON path [default: OUT with a .json extension].
    #[arg(long)]
    pub summary: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Raw)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct EvaluateArgs {
    /// Image under test.
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub reference: PathBuf,
    /// Print JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    /// Clean input image.
    #[arg(
        long = "in",
        conflicts_with = "generate",
        required_unless_present = "generate"
    )]
    pub input: Option<PathBuf>,
    /// Synthesize the built-in glyph image instead, e.g. `256x256`.
    #[arg(long, value_parser = experiment::parse_size)]
    pub generate: Option<(usize, usize)>,
    #[arg(long)]
    pub out_dir: PathBuf,
    #[arg(long, default_value_t = 0.1, value_parser = probability)]
    pub prob: f64,
    #[command(flatten)]
    pub energy: EnergyArgs,
    #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u64).range(1..))]
    pub k_max: u64,
    #[arg(long, default_value_t = 0)]
    pub noise_seed: u64,
    #[arg(long, default_value_t = 0)]
    pub sa_seed: u64,
    #[arg(long, default_value_t = mrf_denoise::DEFAULT_TEMPERATURE_SCALE, value_parser = positive)]
    pub temperature_scale: f64,
    #[arg(long)]
    pub track_best: bool,
    /// Independent replicas; replica r uses noise seed + r and SA seed + r.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub replicas: u64,
    #[arg(long, value_enum, default_value_t = Format::Raw)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[command(flatten)]
    pub energy: EnergyArgs,
    #[arg(long, default_value_t = mrf_denoise::oracle::DEFAULT_MAX_PIXELS)]
    pub max_pixels: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Corrupt(args) => commands::corrupt(&args),
        Command::Denoise(args) => commands::denoise(&args),
        Command::Evaluate(args) => commands::evaluate(&args),
        Command::Experiment(args) => experiment::run(&args),
        Command::Oracle(args) => commands::oracle(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
