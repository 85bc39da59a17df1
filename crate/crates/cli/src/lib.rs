//! Command-line front end for `hypinterp`.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod commands;
pub mod config;
pub mod error;
pub mod seqfile;
pub mod spec;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use commands::{run, Outcome};
pub use error::CliError;
pub use seqfile::{parse_sequence_file, parse_sequence_str, render_sequence};
pub use spec::{GenSpec, WeightSpec};

#[derive(Debug, Parser)]
#[command(
    name = "hypinterp",
    version,
    about = "Interpolation sequences for weighted Bergman spaces on the disk and punctured disk"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a sequence as interpolating, not interpolating or undecided.
    Analyze(AnalyzeArgs),
    /// Tabulate every density quotient of a sweep as CSV.
    Sweep(SweepArgs),
    /// Spectrum of the normalized Gram matrix and the interpolation constant.
    Gram(GramArgs),
    /// Run the weighted Poisson–Jensen suite.
    PjVerify(PjArgs),
    /// Check the kernel diagonal bound and the numeric kernel.
    KernelCheck(KernelArgs),
    /// Write a generated sequence file.
    Gen(GenArgs),
}

/// Flags every command accepts.
#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    /// TOML file with default settings; flags override it.
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Output file; standard output when absent.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Seed for randomized placements.
    #[arg(long, value_name = "N")]
    pub seed: Option<u64>,
}

/// Density sweep settings shared by `analyze` and `sweep`.
#[derive(Debug, Clone, Default, Args)]
pub struct DensityArgs {
    /// Sequence file.
    pub input: PathBuf,
    /// Weight, e.g. `standard-disk:s=2` or `standard-puncture:s=2,t=1,m=1`.
    #[arg(long, value_name = "SPEC")]
    pub weight: Option<WeightSpec>,
    /// Border radii, each in (1/2, 1).
    #[arg(long, value_delimiter = ',', value_name = "R,..")]
    pub r_grid: Option<Vec<f64>>,
    /// Euclidean puncture radii on the cover, each above 1.
    #[arg(long, value_delimiter = ',', value_name = "R,..")]
    pub puncture_r_grid: Option<Vec<f64>>,
    /// Shift of lifted centers into the half plane.
    #[arg(long)]
    pub epsilon: Option<f64>,
    /// Modulus splitting the puncture part from the border part.
    #[arg(long)]
    pub split_a: Option<f64>,
    /// Pseudohyperbolic mesh of the border center net.
    #[arg(long)]
    pub mesh: Option<f64>,
    /// Pseudohyperbolic margin of the border center net.
    #[arg(long)]
    pub margin: Option<f64>,
    /// Euclidean mesh of the puncture center net on the cover.
    #[arg(long)]
    pub puncture_mesh: Option<f64>,
    /// Euclidean margin of the puncture center net on the cover.
    #[arg(long)]
    pub puncture_margin: Option<f64>,
    /// Use the sequence points plus this many seeded random border centers
    /// instead of the net.
    #[arg(long, value_name = "N")]
    pub random_centers: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub density: DensityArgs,
    /// Width of the undecided band around density 1, in (0, 0.5).
    #[arg(long)]
    pub delta: Option<f64>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub density: DensityArgs,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct GramArgs {
    /// Sequence file (disk).
    pub input: PathBuf,
    /// Disk weight, `standard-disk:s=..`.
    #[arg(long, value_name = "SPEC")]
    pub weight: Option<WeightSpec>,
    /// Use the truncated monomial kernel of this degree instead of the
    /// closed form.
    #[arg(long, value_name = "N")]
    pub degree: Option<usize>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct PjArgs {
    /// Circle nodes.
    #[arg(long)]
    pub nodes: Option<usize>,
    /// Largest admissible residual.
    #[arg(long)]
    pub tol: Option<f64>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct KernelArgs {
    /// Disk weight, `standard-disk:s=..`.
    #[arg(long, value_name = "SPEC")]
    pub weight: Option<WeightSpec>,
    /// Points of the sample grid.
    #[arg(long)]
    pub grid_points: Option<usize>,
    /// Outer modulus of the sample grid.
    #[arg(long)]
    pub max_modulus: Option<f64>,
    /// Degree of the numeric kernel; 0 skips the comparison.
    #[arg(long)]
    pub degree: Option<usize>,
    /// Allowed deviation of max/min diagonal from 1.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Allowed relative deviation of the numeric kernel.
    #[arg(long)]
    pub numeric_tol: Option<f64>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    /// `hyperbolic-disk:mesh=..,max-modulus=..`,
    /// `puncture-exponential:step=..,rays=..` or `random-disk:sep=..,max-modulus=..`.
    #[arg(long, value_name = "SPEC")]
    pub lattice: Option<String>,
    /// Largest number of points.
    #[arg(long)]
    pub count: Option<usize>,
    #[command(flatten)]
    pub common: CommonArgs,
}
