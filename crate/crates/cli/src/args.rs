use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "cbnef",
    version,
    about = "Level-one sl_n conformal blocks divisors on M_{0,n}"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    #[value(name = "M", alias = "m")]
    M,
    #[value(name = "N", alias = "n")]
    N,
    #[value(name = "P", alias = "p")]
    P,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Structured,
    Bruteforce,
}

impl From<MethodArg> for cbnef::Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Structured => cbnef::Method::Structured,
            MethodArg::Bruteforce => cbnef::Method::BruteForce,
        }
    }
}

#[derive(Debug, Clone, Copy, Args)]
pub struct NJ {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub j: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Class of D^n_{1,j} on the boundary basis B_2..B_{g+1}.
    Class(NJ),
    /// F-curve intersection number, or a vanishing certificate for general weights.
    Intersect(IntersectArgs),
    /// Extremality certificate.
    Extremal(ExtremalArgs),
    /// Checks D^n_{1,j} against every F-curve.
    Nef(NJ),
    /// Basis-change matrices.
    Basis(BasisArgs),
    /// Expansion of an F-curve on the curves F_{j,1,1}.
    Gamma(GammaArgs),
    /// Hassett contraction check for weight indices.
    Hassett(HassettArgs),
    /// Certificates for every (n, j) in a range, as CSV.
    Survey(SurveyArgs),
    /// Regenerates the golden JSON files.
    Golden(GoldenArgs),
}

#[derive(Debug, Args)]
pub struct IntersectArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, conflicts_with = "weights", required_unless_present = "weights")]
    pub j: Option<u32>,
    /// Comma-separated weight indices j_1..j_n.
    #[arg(long)]
    pub weights: Option<String>,
    /// Block sizes, e.g. 1,1,2,16.
    #[arg(
        long,
        conflicts_with = "partition",
        required_unless_present = "partition"
    )]
    pub shape: Option<String>,
    /// Set partition, e.g. "1|2|3|4,5,6,7,8".
    #[arg(long)]
    pub partition: Option<String>,
}

#[derive(Debug, Args)]
pub struct ExtremalArgs {
    #[command(flatten)]
    pub nj: NJ,
    #[arg(long, value_enum, default_value_t = MethodArg::Structured)]
    pub method: MethodArg,
    /// Exit with status 1 unless the divisor is certified extremal.
    #[arg(long)]
    pub expect_extremal: bool,
}

#[derive(Debug, Args)]
pub struct BasisArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum)]
    pub which: Which,
}

#[derive(Debug, Args)]
pub struct GammaArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub shape: String,
}

#[derive(Debug, Args)]
pub struct HassettArgs {
    #[arg(long)]
    pub n: u32,
    /// Comma-separated weight indices; a single value means symmetric weights.
    #[arg(long)]
    pub weights: String,
    /// Check a single partition instead of running the full check.
    #[arg(long)]
    pub partition: Option<String>,
    /// Sample this many random partitions instead of enumerating all of them.
    #[arg(long)]
    pub samples: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct SurveyArgs {
    #[arg(long)]
    pub n_min: u32,
    #[arg(long)]
    pub n_max: u32,
    #[arg(long, value_enum, default_value_t = MethodArg::Structured)]
    pub method: MethodArg,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// CSV destination; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub expect_extremal: bool,
}

#[derive(Debug, Args)]
pub struct GoldenArgs {
    /// Directory receiving one JSON file per case.
    #[arg(long)]
    pub out: PathBuf,
}
