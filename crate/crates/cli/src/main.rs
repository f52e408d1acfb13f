mod commands;
mod input;
mod output;
mod reference;
mod reproduce;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::{CliError, Record};

#[derive(Parser)]
#[command(name = "coxgrowth", version, about = "Growth series and growth rates of hyperbolic Coxeter groups")]
struct Cli {
    /// Emit a JSON record instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Report wall-clock timings. Output is no longer deterministic.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Coxeter symbol such as "[5,3,3,3]".
    #[arg(long)]
    pub symbol: Option<String>,
    /// Graph file in the `rank`/`edge` format.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Growth series as a reduced rational function.
    Growth {
        #[command(flatten)]
        input: InputArgs,
        /// Also print the first K+1 series coefficients.
        #[arg(long, value_name = "K")]
        coeffs: Option<usize>,
    },
    /// Growth rate with its defining polynomial and number class.
    Rate {
        #[command(flatten)]
        input: InputArgs,
        /// Width of the isolating interval, e.g. 1e-20.
        #[arg(long, value_name = "EPS")]
        precision: Option<String>,
    },
    /// Structural checks, Gram signature and compactness.
    Check {
        #[command(flatten)]
        input: InputArgs,
        /// Dimension of the hyperbolic space; defaults to the file's `dim`.
        #[arg(long, value_name = "N")]
        dim: Option<usize>,
    },
    /// Recompute the reference values and comparison chains.
    Reproduce {
        #[arg(value_enum)]
        scope: Scope,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    Dim4,
    Dim5,
    Examples,
    All,
}

fn run(cli: &Cli) -> Result<Record, CliError> {
    match &cli.command {
        Command::Growth { input, coeffs } => commands::growth(input, *coeffs),
        Command::Rate { input, precision } => commands::rate(input, precision.as_deref()),
        Command::Check { input, dim } => commands::check(input, *dim),
        Command::Reproduce { scope } => reproduce::reproduce(*scope),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let start = Instant::now();
    match run(&cli) {
        Ok(mut record) => {
            if cli.timings {
                record.set_elapsed(start.elapsed());
            }
            match output::emit(&record, cli.json) {
                // A closed pipe (`| head`) is the reader's choice, not an error.
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
                _ => ExitCode::from(record.exit_code()),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
