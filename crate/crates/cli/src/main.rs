//! `interlacing`: zeros, extra points, interlacing verdicts, reference table
//! reproduction and parameter scans, with JSON or CSV output.
//!
//! Exit codes: 0 success, 2 input error, 3 inadmissible parameters,
//! 4 internal oracle or table mismatch, 5 conjecture counterexample.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::{emit_error, ErrorBody, Format};

#[derive(Debug, Parser)]
#[command(name = "interlacing", version, about = "Completed interlacing of shifted orthogonal polynomial zeros")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Jacobi,
    Mp,
    Pj,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    family: FamilyArg,
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    beta: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    lambda: Option<f64>,
    /// Radians, or a multiple of π such as `7/9pi`.
    #[arg(long, allow_hyphen_values = true)]
    phi: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    b: Option<f64>,
    #[arg(short = 'n', long = "degree")]
    n: usize,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Debug, Args)]
struct IoArgs {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScanArg {
    Conjecture1,
    Conjecture2,
    Theorem,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sorted zeros of P_n.
    Zeros(FamilyArgs),
    /// The extra points E1 <= E2 and admissibility data.
    ExtraPoints(FamilyArgs),
    /// Placement of E1, E2 among the zeros of G_{n+1} and the interlacing verdict.
    Classify(FamilyArgs),
    /// Recompute a reference table (T2..T6) and compare.
    Table {
        id: String,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Sweep a parameter grid.
    Scan {
        kind: ScanArg,
        /// Sweep file; omit (or pass `default`) for the built-in grid.
        spec: Option<PathBuf>,
        #[command(flatten)]
        io: IoArgs,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            emit_error(
                "",
                ErrorBody {
                    code: "usage".into(),
                    exit_code: 2,
                    message: e.render().to_string().trim().to_string(),
                    reason: None,
                },
            );
            return ExitCode::from(2);
        }
    };
    let code = commands::run(cli.command);
    ExitCode::from(code)
}
