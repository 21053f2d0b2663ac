//! `hexchain`: Wiener indices of spiro and polyphenyl hexagonal chains.
//!
//! Exit status: 0 success, 2 invalid input, 3 disagreement or failed
//! invariant, 4 I/O failure, 5 request beyond the exhaustive limit.

mod commands;
mod error;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use hexchain_core::{ChainKind, Method, DEFAULT_MAX_N};

use crate::error::CliError;
use crate::output::Format;

/// Environment variable overriding the exhaustive enumeration limit.
pub const MAX_N_ENV: &str = "HEXCHAIN_MAX_N";

#[derive(Debug, Parser)]
#[command(
    name = "hexchain",
    version,
    about = "Wiener indices of spiro and polyphenyl hexagonal chains"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the Wiener index of one chain by several methods.
    Compute(ComputeArgs),
    /// List every chain of one length with its Wiener index.
    Enumerate(EnumerateArgs),
    /// Rank the chains of one length with the smallest or largest index.
    Extremal(ExtremalArgs),
    /// Run the invariant suite for all chain lengths up to a bound.
    Verify(VerifyArgs),
    /// Time closed form, recurrence and BFS on seeded random codes.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(long, default_value = "spiro")]
    pub kind: ChainKind,
    /// Code word over O, M, P; omit for chains of one or two hexagons.
    #[arg(long, default_value = "")]
    pub code: String,
    /// Number of hexagons; required when the code is empty.
    #[arg(long)]
    pub n: Option<usize>,
    /// Methods to run [default: bfs,recurrence,closed plus polynomial on constant codes]
    #[arg(long, value_delimiter = ',')]
    pub methods: Vec<Method>,
    #[arg(long, value_enum, default_value = "jsonl")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long, default_value = "spiro")]
    pub kind: ChainKind,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Write to a file instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// Also compute each index by BFS and add a `w_bfs` column.
    #[arg(long)]
    pub with_bfs: bool,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("direction").args(["min", "max"])))]
pub struct ExtremalArgs {
    #[arg(long, default_value = "spiro")]
    pub kind: ChainKind,
    #[arg(long)]
    pub n: usize,
    /// Smallest indices first (default).
    #[arg(long)]
    pub min: bool,
    /// Largest indices first.
    #[arg(long)]
    pub max: bool,
    /// Number of rank groups to report; tied chains share a group.
    #[arg(long, default_value_t = 3)]
    pub top: usize,
    #[arg(long, value_enum, default_value = "jsonl")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub max_n: usize,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Chain lengths, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub n: Vec<usize>,
    #[arg(long, default_value = "spiro")]
    pub kind: ChainKind,
    #[arg(long, value_delimiter = ',', default_value = "closed,recurrence,bfs")]
    pub methods: Vec<Method>,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Random codes per length.
    #[arg(long, default_value_t = 1)]
    pub samples: usize,
    /// BFS is skipped above this many hexagons.
    #[arg(long, default_value_t = 2000)]
    pub bfs_max_n: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

/// Exhaustive limit from the environment, or the default.
fn exhaustive_limit() -> Result<usize, CliError> {
    match std::env::var(MAX_N_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::Input(format!("{MAX_N_ENV}={v:?} is not a non-negative integer"))
        }),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Compute(args) => commands::compute(&args),
        Command::Enumerate(args) => commands::enumerate(&args, exhaustive_limit()?),
        Command::Extremal(args) => commands::extremal(&args, exhaustive_limit()?),
        Command::Verify(args) => commands::verify(&args, exhaustive_limit()?),
        Command::Bench(args) => commands::bench(&args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("hexchain: {e}");
            e.exit_code()
        }
    }
}
