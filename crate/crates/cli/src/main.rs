//! `rbla`: check, build and decompose Rota-Baxter Lie algebras and their
//! extending structures from JSON documents.
//!
//! Exit status: 0 on success (including a decided non-equivalence), 1 when an
//! algebraic check fails, 2 on unreadable or malformed input.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;

#[derive(Parser)]
#[command(name = "rbla", version, about = "Exact checks and constructions for Rota-Baxter Lie algebras")]
struct Cli {
    /// Report every violated basis tuple instead of the first per condition.
    #[arg(long, global = true)]
    exhaustive: bool,
    /// Print reports as text instead of JSON.
    #[arg(long, global = true)]
    human: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a lie, rb_lie, datum, exder or chain document.
    Check { file: PathBuf },
    /// Build the unified product of a datum and write it as an rb_lie document.
    Unify {
        datum: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Decompose an rb_lie document along the coordinate subalgebra `--sub`.
    Decompose {
        ambient: PathBuf,
        /// Comma-separated 0-based basis indices spanning the subalgebra.
        #[arg(long, value_delimiter = ',', required = true)]
        sub: Vec<usize>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Extended derivations.
    #[command(subcommand)]
    Exder(ExderCommand),
    /// Write the built-in fixtures to a directory.
    Demo {
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Subcommand)]
enum ExderCommand {
    /// Check an exder document.
    Check { file: PathBuf },
    /// Decide whether two quadruples are equivalent.
    Equiv { first: PathBuf, second: PathBuf },
    /// Group quadruples into equivalence classes (0-based file positions).
    Partition {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Extend along an exder document, or along every step of a chain.
    Extend {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = commands::Options { exhaustive: cli.exhaustive, human: cli.human };
    let result = match cli.command {
        Command::Check { file } => commands::check(&file, opts),
        Command::Unify { datum, output } => commands::unify(&datum, &output, opts),
        Command::Decompose { ambient, sub, output } => commands::decompose(&ambient, &sub, &output, opts),
        Command::Exder(ExderCommand::Check { file }) => commands::check(&file, opts),
        Command::Exder(ExderCommand::Equiv { first, second }) => commands::equiv(&first, &second),
        Command::Exder(ExderCommand::Partition { files }) => commands::partition(&files),
        Command::Exder(ExderCommand::Extend { file, output }) => commands::extend(&file, &output, opts),
        Command::Demo { output } => commands::demo(&output),
    };
    match result {
        Ok(outcome) => ExitCode::from(outcome as u8),
        Err(err) => {
            eprintln!("rbla: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
