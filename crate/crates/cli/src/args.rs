use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pdmwell_core::verify::Suite;

#[derive(Debug, Parser)]
#[command(name = "pdmwell", version, about = "Position-dependent-mass oscillator wells")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy levels E_0..E_nmax.
    Spectrum(SpectrumArgs),
    /// Sampled wavefunctions and probability densities.
    Density(DensityArgs),
    /// Run a verification suite and print a JSON report.
    Verify(VerifyArgs),
    /// Confined -> semiconfined energy convergence as b grows.
    LimitStudy(LimitStudyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelChoice {
    Semi,
    Confined,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct PhysArgs {
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub m0: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub omega: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub hbar: f64,
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    #[arg(long, value_enum, default_value_t = ModelChoice::Semi)]
    pub model: ModelChoice,
    /// Left wall position.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub a: f64,
    /// Right wall position (confined model only).
    #[arg(long, allow_negative_numbers = true)]
    pub b: Option<f64>,
    #[command(flatten)]
    pub phys: PhysArgs,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, default_value_t = 10)]
    pub nmax: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct DensityArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, default_value_t = 10)]
    pub nmax: usize,
    /// Number of uniformly spaced x samples per state.
    #[arg(long, default_value_t = 400)]
    pub samples: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = parse_suite)]
    pub suite: Suite,
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, default_value_t = 10)]
    pub nmax: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LimitStudyArgs {
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub a: f64,
    #[arg(long, default_value_t = 0)]
    pub n: usize,
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    pub b_start: f64,
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    pub b_factor: f64,
    #[arg(long, default_value_t = 8)]
    pub steps: usize,
    #[command(flatten)]
    pub phys: PhysArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: pdmwell_core::Error| e.to_string())
}
