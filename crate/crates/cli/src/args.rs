use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use leflab_core::gin::GinOptions;
use serde::Serialize;

#[derive(Parser, Debug, Clone)]
#[command(name = "leflab", version, about = "Generic initial ideals, Lefschetz properties and hyperplane arrangements")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Master seed; decimal or 0x-prefixed hex.
    #[arg(long, global = true, env = "LEFLAB_SEED", default_value = "0xC0FFEE", value_parser = parse_seed)]
    pub seed: u64,
    /// Bound on the entries of random changes of coordinates.
    #[arg(long, global = true, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub bound: u64,
    /// Maximum number of gin trials before giving up.
    #[arg(long, global = true, default_value_t = 8, value_parser = clap::value_parser!(u64).range(2..))]
    pub retries: u64,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Directory for cached arrangement reports.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Where reproducer files go when a theorem check fails.
    #[arg(long, global = true, default_value = ".")]
    pub reproducer_dir: PathBuf,
}

impl RunConfig {
    pub fn gin_options(&self) -> GinOptions {
        GinOptions { seed: self.seed, bound: self.bound, max_trials: self.retries as usize }
    }

    /// The part of the configuration that can change results.
    pub fn summary(&self) -> ConfigSummary {
        ConfigSummary { seed: format!("{:#x}", self.seed), bound: self.bound, retries: self.retries }
    }
}

#[derive(Serialize, Debug, Clone)]
pub struct ConfigSummary {
    pub seed: String,
    pub bound: u64,
    pub retries: u64,
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let t = s.trim();
    let parsed = match t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => t.parse(),
    };
    parsed.map_err(|e| format!("invalid seed `{s}`: {e}"))
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    /// One JSON document per run.
    Structured,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropertyArg {
    Wlp,
    Slp,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Reverse lexicographic generic initial ideal of an ideal file.
    Gin {
        file: PathBuf,
        #[arg(long)]
        nvars: Option<usize>,
    },
    /// Decide the weak or strong Lefschetz property of S/I.
    Lefschetz {
        file: PathBuf,
        #[arg(long, value_enum)]
        property: PropertyArg,
        #[arg(long)]
        nvars: Option<usize>,
        /// Also run the linear-algebra oracle and require agreement.
        #[arg(long)]
        cross_validate: bool,
    },
    /// Hyperplane arrangements.
    Arr {
        #[command(subcommand)]
        action: ArrCommand,
    },
    /// Almost complete intersection of three forms in three variables.
    Aci { f0: String, f1: String, f2: String },
}

#[derive(Subcommand, Debug, Clone)]
pub enum ArrCommand {
    /// Full report for one arrangement file.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        analysis: AnalysisArgs,
    },
    /// Analyze a seeded random corpus and tabulate the verdicts.
    Scan {
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        nvars: usize,
        /// Smallest number of hyperplanes (defaults to the number of variables).
        #[arg(long)]
        min_d: Option<usize>,
        #[arg(long, default_value_t = 7)]
        max_d: usize,
        /// Keep non-essential arrangements too.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        analysis: AnalysisArgs,
    },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct AnalysisArgs {
    /// Include Q among the Jacobian generators.
    #[arg(long)]
    pub include_q: bool,
    /// Recompute Lefschetz verdicts with the linear-algebra oracle.
    #[arg(long)]
    pub cross_validate: bool,
}
