use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hepta_cli::commands::{self, render_bench};
use hepta_cli::{io, parse_band_file, parse_vector_str, CliError, Family, ModeArg};

/// Inversion of heptadiagonal matrices by seed and determinant recurrences.
///
/// Exit codes: 0 success, 1 singular matrix or failed verification,
/// 2 invalid input, 3 zero super-diagonal entry in exact or float mode.
#[derive(Parser)]
#[command(name = "hepta", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the inverse as JSON.
    Invert {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
        mode: ModeArg,
    },
    /// Print the determinant.
    Det {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
        mode: ModeArg,
    },
    /// Solve H x = rhs; rhs is a JSON array of rational strings.
    Solve {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        rhs: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
        mode: ModeArg,
    },
    /// Write a band file.
    Gen {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Cross-check the fast inverse against the dense oracle and the
    /// recurrence identities.
    Verify {
        #[arg(long)]
        input: PathBuf,
    },
    /// Time inversion of the constant-band family.
    Bench {
        /// Comma-separated orders.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
        mode: ModeArg,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        reps: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Invert { input, output, mode } => {
            let report = commands::invert(&parse_band_file(&input)?, mode)?;
            io::emit(output.as_deref(), &io::json_lines(&report))
        }
        Command::Det { input, output, mode } => {
            let det = commands::det(&parse_band_file(&input)?, mode)?;
            io::emit(output.as_deref(), &det)
        }
        Command::Solve {
            input,
            rhs,
            output,
            mode,
        } => {
            let m = parse_band_file(&input)?;
            let rhs = parse_vector_str(&io::read(&rhs)?)?;
            let x = commands::solve(&m, &rhs, mode)?;
            io::emit(output.as_deref(), &serde_json::to_string(&x).expect("serializable"))
        }
        Command::Gen {
            family,
            n,
            seed,
            output,
        } => io::emit(output.as_deref(), &io::json_lines(&commands::gen(family, n, seed)?)),
        Command::Verify { input } => {
            let report = commands::verify(&parse_band_file(&input)?);
            io::emit(None, &report.lines.join("\n"))?;
            if report.singular {
                Err(hepta::HeptaError::SingularMatrix.into())
            } else if report.passed {
                Ok(())
            } else {
                Err(CliError::VerificationFailed)
            }
        }
        Command::Bench { n, mode, reps, output } => {
            let rows = commands::bench(&n, mode, reps as usize)?;
            io::emit(output.as_deref(), &render_bench(&rows))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            if let Some(hint) = err.hint() {
                eprintln!("hint: {hint}");
            }
            ExitCode::from(err.exit_code())
        }
    }
}
