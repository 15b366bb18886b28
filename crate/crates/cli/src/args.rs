use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Seed used when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 20_190_101;

#[derive(Debug, Parser)]
#[command(
    name = "sitepc",
    version,
    about = "Series, enumeration and Monte Carlo tools for the site-percolation critical point on Z^d"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve the lace-expansion fixed point for 2d*p_c as a series in t = 1/(2d)
    Expand(ExpandArgs),
    /// Convert a series between s = 1/(2d-1) and t = 1/(2d)
    Convert(ConvertArgs),
    /// Count lattice points by norms, or walks ending at a point
    Count(CountArgs),
    /// Enumerate cycles through the origin and a point, with their occupation polynomial
    Cycles(CyclesArgs),
    /// Wrapping-threshold estimate of p_c and wrapping probabilities
    Pc(PcArgs),
    /// Two-point function tau_p(x) and its chemical-distance variants
    Tau(TauArgs),
    /// Probability that the origin is doubly connected to x
    Double(DoubleArgs),
    /// Triangle diagrams from an estimated two-point function
    Triangle(TriangleArgs),
    /// Monte Carlo estimate of a lace-expansion coefficient at k = 0
    Pi(PiArgs),
    /// Relative residual of the k = 0 Ornstein-Zernike identity
    Oze(OzeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Output options shared by every subcommand.
#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Exit with status 3 when the result carries a finite-size warning
    #[arg(long)]
    pub strict: bool,
}

/// Sampling options shared by the stochastic subcommands.
#[derive(Debug, Args)]
pub struct RunArgs {
    /// Number of independent samples
    #[arg(long, default_value_t = 1000)]
    pub samples: u64,
    /// Master seed; 0 draws one from the operating system
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Worker threads (results do not depend on this)
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    /// Series order M
    #[arg(long, default_value_t = 2)]
    pub order: usize,
    /// Also evaluate p_c at this dimension
    #[arg(long)]
    pub d: Option<u32>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    /// JSON series file {variable, order, coefficients}
    #[arg(long)]
    pub input: PathBuf,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    /// Dimension
    #[arg(long)]
    pub d: usize,
    /// L1 norm of the counted points
    #[arg(long, requires = "linf", conflicts_with_all = ["steps", "x"])]
    pub l1: Option<u32>,
    /// L-infinity norm of the counted points
    #[arg(long, requires = "l1")]
    pub linf: Option<u32>,
    /// Number of walk steps m (counts J^{*m}(x))
    #[arg(long, requires = "x")]
    pub steps: Option<u32>,
    /// Walk end point, e.g. 1,1,0
    #[arg(long, requires = "steps")]
    pub x: Option<String>,
    /// Also reconstruct the count as a polynomial in 2d of at most this degree
    #[arg(long)]
    pub omega_degree: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CyclesArgs {
    /// Second point of the cycles, e.g. 1,1,1; without it, sum over all points
    /// with |x| >= 2 of dimension --d
    #[arg(long)]
    pub x: Option<String>,
    /// Dimension for the summed polynomial
    #[arg(long, conflicts_with = "x")]
    pub d: Option<usize>,
    /// Cycle length (or maximum length for the sum)
    #[arg(long, default_value_t = 6)]
    pub l: usize,
    /// Evaluate the occupation polynomial at this density
    #[arg(long)]
    pub p: Option<f64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct BoxArgs {
    /// Dimension
    #[arg(long)]
    pub d: usize,
    /// Side of the periodic box (even, at least 4)
    #[arg(long = "L")]
    pub side: u32,
}

#[derive(Debug, Args)]
pub struct PcArgs {
    #[command(flatten)]
    pub geometry: BoxArgs,
    /// Densities at which to report the wrapping probability, comma separated
    #[arg(long, value_delimiter = ',')]
    pub p: Vec<f64>,
    #[command(flatten)]
    pub run: RunArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Plain,
    AtLeast,
    AtMost,
    Exactly,
}

#[derive(Debug, Args)]
pub struct TauArgs {
    #[command(flatten)]
    pub geometry: BoxArgs,
    /// Site occupation probability
    #[arg(long)]
    pub p: f64,
    /// Target point, e.g. 1,1,0
    #[arg(long)]
    pub x: String,
    /// Connection event
    #[arg(long, value_enum, default_value_t = VariantArg::Plain)]
    pub variant: VariantArg,
    /// Chemical-distance threshold for the non-plain variants
    #[arg(long)]
    pub l: Option<u32>,
    #[command(flatten)]
    pub run: RunArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct DoubleArgs {
    #[command(flatten)]
    pub geometry: BoxArgs,
    /// Site occupation probability
    #[arg(long)]
    pub p: f64,
    /// Target point, e.g. 1,1,0
    #[arg(long)]
    pub x: String,
    #[command(flatten)]
    pub run: RunArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct TriangleArgs {
    #[command(flatten)]
    pub geometry: BoxArgs,
    /// Site occupation probability (default 1/(2d))
    #[arg(long)]
    pub p: Option<f64>,
    /// Base points explored per configuration
    #[arg(long, default_value_t = 8)]
    pub bases: u64,
    /// Largest acceptable tau on the antipodal shell
    #[arg(long, default_value_t = 1e-3)]
    pub floor: f64,
    #[command(flatten)]
    pub run: RunArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct PiArgs {
    /// Coefficient index (0, 1 or 2)
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub geometry: BoxArgs,
    /// Site occupation probability (default 1/(2d))
    #[arg(long)]
    pub p: Option<f64>,
    /// L1 radius of the summed displacements
    #[arg(long, default_value_t = 4)]
    pub radius: u32,
    #[command(flatten)]
    pub run: RunArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OzeArgs {
    #[command(flatten)]
    pub geometry: BoxArgs,
    /// Site occupation probability (default 0.8/(2d))
    #[arg(long)]
    pub p: Option<f64>,
    /// L1 radius of the summed displacements
    #[arg(long, default_value_t = 4)]
    pub radius: u32,
    #[command(flatten)]
    pub run: RunArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}
