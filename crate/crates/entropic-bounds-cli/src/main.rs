//! Command-line surface: scenario evaluation, figure-data emission,
//! verification sweeps and key-rate queries.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or validation
//! error, 3 I/O error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod config;
mod output;

use config::{CliError, FileConfig};

#[derive(Parser)]
#[command(name = "entropic-bounds", version, about = "Conditional entropic uncertainty bounds for two-qubit states")]
struct Cli {
    /// Optional flat key=value config file; command-line flags take precedence.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Worker threads for grid sweeps. The ENTROPIC_BOUNDS_THREADS
    /// environment variable caps whatever is requested here.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact conditional entropy sum and every bound for one scenario.
    Evaluate(commands::evaluate::Args),
    /// Emit figure data as CSV.
    Figure(commands::figure::Args),
    /// Run the gap-inequality and bound-validity verification sweeps.
    Verify(commands::verify::Args),
    /// Evaluate the key-rate lower bound.
    Keyrate(commands::keyrate::Args),
}

fn run(cli: Cli) -> Result<(), CliError> {
    let file = FileConfig::load(cli.config.as_deref())?;
    config::init_threads(cli.threads, &file)?;
    match cli.command {
        Command::Evaluate(args) => commands::evaluate::run(args, &file),
        Command::Figure(args) => commands::figure::run(args, &file),
        Command::Verify(args) => commands::verify::run(args, &file),
        Command::Keyrate(args) => commands::keyrate::run(args, &file),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.code())
        }
    }
}
