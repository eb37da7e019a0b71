//! Command-line front end for the three-vortex library: deterministic
//! simulation runs, orbit classification reports, and parameter sweeps.

// Validation sites write `!(x > bound)` on purpose: unlike `x <= bound`,
// the negated comparison also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod classify;
mod config;
mod output;
mod simulate;
mod sweep;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

/// Tool-level failure, split by exit code: configuration problems exit with
/// 1, runtime and integration problems with 2.
#[derive(Debug)]
pub enum CliError {
    Config(String),
    Runtime(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 1,
            CliError::Runtime(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(msg) => write!(f, "config: {msg}"),
            CliError::Runtime(msg) => write!(f, "runtime: {msg}"),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "trivortex",
    version,
    about = "Planar three-vortex dynamics: simulation, classification, sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integrate a configuration in one or all formulations and write
    /// trajectory CSVs plus a summary.
    Simulate {
        /// JSON configuration file.
        #[arg(long)]
        config: PathBuf,
        /// Output directory for trajectory files and summary.json.
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Seed for the starting shape when the config leaves
        /// initial_condition out.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Report the scalar invariants, admissible ratio window, orbit family,
    /// and equilibria for a strength triple.
    Classify {
        /// JSON configuration file.
        #[arg(long)]
        config: PathBuf,
        /// Output directory for report.json.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Evaluate the ratio-window trichotomy over an (m, n) grid and write
    /// one CSV record per point.
    Sweep {
        /// JSON configuration file.
        #[arg(long)]
        config: PathBuf,
        /// Output directory for sweep.csv.
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Worker threads for the grid; defaults to all cores.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not errors; argument mistakes
            // count as configuration problems.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Simulate { config, out, seed } => {
            config::load(&config).and_then(|cfg| simulate::run(&cfg, &out, seed))
        }
        Command::Classify { config, out } => {
            config::load(&config).and_then(|cfg| classify::run(&cfg, &out))
        }
        Command::Sweep { config, out, jobs } => {
            config::load(&config).and_then(|cfg| sweep::run(&cfg, &out, jobs))
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
