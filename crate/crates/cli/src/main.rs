use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pencil_cli::commands::{self, Output};
use pencil_cli::format::to_text;
use pencil_cli::CliError;

/// Exact analysis and canonical forms of matrix pencils (E, A).
#[derive(Parser)]
#[command(name = "pencil", version)]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Prefix for output files (default: the input path without extension, plus ".").
    #[arg(long, global = true, value_name = "PREFIX")]
    out: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Index, defects, dynamical dimension, strangeness and regularity.
    Analyze { file: PathBuf },
    /// Kronecker form with explicit P and Q.
    Canonical {
        file: PathBuf,
        /// Weierstrass form; fails on singular pencils.
        #[arg(long)]
        weierstrass: bool,
    },
    /// Weak-equivalence canonical form with P, Q and R.
    Weak { file: PathBuf },
    /// Build the block-diagonal pencil of a structure file.
    Synth {
        file: PathBuf,
        /// Seed for the scrambling transform.
        #[arg(long, requires = "scramble")]
        seed: Option<u64>,
        /// Apply a seeded random strong equivalence and write it out.
        #[arg(long)]
        scramble: bool,
    },
    /// Run every internal consistency check on one pencil.
    Check { file: PathBuf },
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let prefix = |file: &PathBuf| cli.out.clone().unwrap_or_else(|| commands::default_prefix(file));
    let out = match &cli.command {
        Command::Analyze { file } => commands::analyze(&commands::read_pencil(file)?),
        Command::Canonical { file, weierstrass } => {
            commands::canonical(&commands::read_pencil(file)?, *weierstrass, &prefix(file))?
        }
        Command::Weak { file } => commands::weak(&commands::read_pencil(file)?, &prefix(file)),
        Command::Synth { file, seed, scramble } => {
            let s = commands::read_structure(file)?;
            let seed = scramble.then(|| seed.unwrap_or(0));
            commands::synth(&s, seed, &prefix(file))
        }
        Command::Check { file } => commands::check(&commands::read_pencil(file)?),
    };
    commands::write_files(&out.files)?;
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                print!("{}", to_text(&out.json));
            } else {
                print!("{}", out.text);
            }
            if out.failed > 0 {
                let err = CliError::ChecksFailed(out.failed);
                eprintln!("error: {err}");
                return ExitCode::from(err.exit_code());
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
