//! `gravrank`: topology statistics, centrality rankings, SI spreading curves
//! and ranking evaluation from an edge-list file.

mod commands;
mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::ExperimentConfig;

#[derive(Parser, Debug)]
#[command(name = "gravrank", version, about = "Influential-node ranking with the effective-distance gravity model")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Node/edge counts, mean degree, mean distance, clustering, assortativity.
    Stats(StatsArgs),
    /// Per-measure scores and rankings, one output file per measure.
    Rank(RankArgs),
    /// SI infection curves seeded with each measure's top-k nodes.
    Spread(SpreadArgs),
    /// Kendall tau against SI ground truth over a beta grid, top-k overlap,
    /// and rank-ordered spreading power.
    Evaluate(EvaluateArgs),
}

#[derive(Args, Debug, Clone)]
pub struct IoArgs {
    /// Edge-list file: two node labels per line, `#`/`%` comments.
    #[arg(long)]
    pub input: PathBuf,
    /// Output directory, created if missing.
    #[arg(long, default_value = "out")]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Use the first two columns of lines that carry extra fields.
    #[arg(long)]
    pub ignore_extra_columns: bool,
}

#[derive(Args, Debug, Clone)]
pub struct MeasureArgs {
    /// Comma-separated subset of dc,bc,cc,ec,pagerank,gm,effg.
    #[arg(long, default_value = "dc,bc,cc,ec,pagerank,gm,effg")]
    pub measures: String,
    /// PageRank damping; 1.0 is the undamped walk.
    #[arg(long, default_value_t = 1.0)]
    pub damping: f64,
    #[arg(long, default_value_t = gravrank::centrality::DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, default_value_t = gravrank::centrality::DEFAULT_MAX_ITER)]
    pub max_iter: usize,
    /// Peers entering the EffG sum.
    #[arg(long, value_enum, default_value_t = EffgPeersArg::All)]
    pub effg_peers: EffgPeersArg,
}

#[derive(Args, Debug)]
struct StatsArgs {
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Args, Debug)]
struct RankArgs {
    #[command(flatten)]
    io: IoArgs,
    #[command(flatten)]
    measures: MeasureArgs,
    /// Also write the effective-distance matrix as CSV.
    #[arg(long)]
    dump_distances: bool,
}

#[derive(Args, Debug)]
struct SpreadArgs {
    #[command(flatten)]
    io: IoArgs,
    #[command(flatten)]
    measures: MeasureArgs,
    #[arg(long, default_value_t = 0.2)]
    beta: f64,
    #[arg(long, default_value_t = 20)]
    t_max: usize,
    #[arg(long, default_value_t = 50)]
    runs: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Seed-set size per measure.
    #[arg(long, default_value_t = 100)]
    k: usize,
}

#[derive(Args, Debug)]
struct EvaluateArgs {
    #[command(flatten)]
    io: IoArgs,
    #[command(flatten)]
    measures: MeasureArgs,
    /// Transmission probabilities for the tau sweep; values above 1 are clamped.
    #[arg(long, value_delimiter = ',', default_value = "0.2,0.4,0.6,0.8,1.0,1.2,1.4,1.6")]
    beta_grid: Vec<f64>,
    /// SI steps per run in the tau sweep.
    #[arg(long, default_value_t = 5)]
    t_max: usize,
    /// Transmission probability for the SI ranking and the rank-vs-spread tables.
    #[arg(long, default_value_t = 0.2)]
    beta: f64,
    /// SI steps for the SI ranking and the rank-vs-spread tables.
    #[arg(long, default_value_t = 20)]
    spread_t_max: usize,
    #[arg(long, default_value_t = 50)]
    runs: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Top-k size for the overlap table.
    #[arg(long, default_value_t = 20)]
    k: usize,
    #[arg(long, value_enum, default_value_t = TauConventionArg::Standard)]
    tau_convention: TauConventionArg,
    /// Sequence every measure is correlated with: `si` or a measure name.
    #[arg(long, default_value = "si")]
    reference: String,
    /// Ranking the overlap table compares every other ranking with.
    #[arg(long, default_value = "effg")]
    overlap_reference: String,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum TauConventionArg {
    Standard,
    PaperEq11,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum EffgPeersArg {
    All,
    SkipUnit,
}

/// Failure classes with their process exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments, unreadable input, unwritable output: exit 2.
    Usage(String),
    /// The computation itself failed (non-convergence): exit 1.
    Compute(String),
}

impl From<gravrank::Error> for CliError {
    fn from(e: gravrank::Error) -> Self {
        if e.is_computational() {
            CliError::Compute(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Stats(a) => ExperimentConfig::stats(&a.io).and_then(|c| commands::stats(&c)),
        Command::Rank(a) => ExperimentConfig::rank(&a.io, &a.measures, a.dump_distances)
            .and_then(|c| commands::rank(&c)),
        Command::Spread(a) => ExperimentConfig::spread(
            &a.io,
            &a.measures,
            config::SiArgs {
                beta: a.beta,
                t_max: a.t_max,
                runs: a.runs,
                seed: a.seed,
            },
            a.k,
        )
        .and_then(|c| commands::spread(&c)),
        Command::Evaluate(a) => ExperimentConfig::evaluate(
            &a.io,
            &a.measures,
            config::EvaluateParams {
                beta_grid: a.beta_grid,
                t_max: a.t_max,
                beta: a.beta,
                spread_t_max: a.spread_t_max,
                runs: a.runs,
                seed: a.seed,
                k: a.k,
                tau_convention: a.tau_convention,
                reference: a.reference,
                overlap_reference: a.overlap_reference,
            },
        )
        .and_then(|c| commands::evaluate(&c)),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
