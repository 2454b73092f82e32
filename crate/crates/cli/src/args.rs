use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use degchrom_core::Method;

#[derive(Debug, Parser)]
#[command(
    name = "degchrom",
    version,
    about = "Exact degree chromatic polynomials and leading-term checks for trees"
)]
pub struct Cli {
    /// Worker threads for enumeration and campaigns.
    #[arg(long, global = true, env = "DEGCHROM_THREADS")]
    pub threads: Option<usize>,

    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the full coefficient vector of P_m(G, k).
    Compute(ComputeArgs),
    /// Count admissible colorings by exhaustive enumeration.
    Oracle(OracleArgs),
    /// Check the predicted leading terms of P_m(T, k) for trees.
    Verify(VerifyArgs),
    /// Check the pairwise intersection bounds for every vertex pair.
    Bounds(BoundsArgs),
    /// Random-tree verification campaign (CSV by default).
    Campaign(CampaignArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Oracle,
    TreeDp,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Oracle => Method::Oracle,
            MethodArg::TreeDp => Method::TreeDp,
        }
    }
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Lift the limit on the number of colorings the oracle enumerates.
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub m: usize,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub m: usize,
    /// Single color count; shorthand for --k-min K --k-max K.
    #[arg(long, conflicts_with_all = ["k_min", "k_max"])]
    pub k: Option<u32>,
    #[arg(long, default_value_t = 0)]
    pub k_min: u32,
    /// Defaults to the vertex count.
    #[arg(long)]
    pub k_max: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

/// Either a graph file or a random-tree generator.
#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "source")]
pub struct SourceArgs {
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Number of uniformly random labeled trees.
    #[arg(long)]
    pub random: Option<usize>,
}

#[derive(Debug, Args)]
pub struct GeneratorArgs {
    #[arg(long, default_value_t = 10)]
    pub n_min: usize,
    #[arg(long, default_value_t = 60)]
    pub n_max: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[command(flatten)]
    pub generator: GeneratorArgs,
    /// Threshold(s), comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub m: Vec<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Record per-instance wall time (makes output run-dependent).
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Args)]
pub struct CampaignArgs {
    #[arg(long)]
    pub random: usize,
    #[command(flatten)]
    pub generator: GeneratorArgs,
    #[arg(long, value_delimiter = ',', required = true)]
    pub m: Vec<usize>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub m: usize,
    #[arg(long, default_value_t = 1)]
    pub k_min: u32,
    #[arg(long, default_value_t = 4)]
    pub k_max: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(flatten)]
    pub budget: BudgetArgs,
}
