//! Structure files and command implementations.
//!
//! Exit codes: 0 when every checked axiom holds, 1 on an axiom failure or a
//! refused construction, 2 on malformed input or usage.

pub mod commands;
pub mod format;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::report::DEFAULT_MAX_WITNESSES;
use commands::{Outcome, TransformOp, EXIT_INPUT, EXIT_OK};

#[derive(Debug, Parser)]
#[command(name = "homalt", version, about = "Exact checks for Hom-alternative and Hom-Poisson structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the axioms of one structure.
    Verify {
        file: PathBuf,
        name: String,
        /// Comma-separated axiom ids, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_MAX_WITNESSES)]
        max_witnesses: usize,
    },
    /// Replace a structure by its twist.
    Twist {
        file: PathBuf,
        name: String,
        /// `id`, `diag:a,b,...` or the name of a linear_map entry (algebras and coalgebras only).
        #[arg(long)]
        endo: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replace a structure by its negation or opposite.
    Transform {
        file: PathBuf,
        name: String,
        op: Op,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that a linear_map entry is a morphism between two structures.
    CheckMorphism {
        file: PathBuf,
        map: String,
        from: String,
        to: String,
        /// Also require the map to commute with the twisting maps.
        #[arg(long)]
        strict: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_WITNESSES)]
        max_witnesses: usize,
    },
    /// Browse the built-in catalogue.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Debug, Subcommand)]
enum CatalogCommand {
    /// List entry names and kinds.
    List,
    /// Write one entry (with its base) as a structure file.
    Export {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Op {
    Negate,
    Opposite,
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_INPUT;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    let result = match cli.command {
        Command::Verify { file, name, suite, max_witnesses } => commands::verify(&file, &name, &suite, max_witnesses),
        Command::Twist { file, name, endo, out } => commands::twist(&file, &name, endo.as_deref(), out.as_deref()),
        Command::Transform { file, name, op, out } => {
            let op = match op {
                Op::Negate => TransformOp::Negate,
                Op::Opposite => TransformOp::Opposite,
            };
            commands::transform(&file, &name, op, out.as_deref())
        }
        Command::CheckMorphism { file, map, from, to, strict, max_witnesses } => {
            commands::check_morphism(&file, &map, &from, &to, strict, max_witnesses)
        }
        Command::Catalog { command } => match command {
            CatalogCommand::List => Ok(commands::catalog_list()),
            CatalogCommand::Export { name, out } => commands::catalog_export(&name, out.as_deref()),
        },
    };
    match result {
        Ok(Outcome { code, stdout, notes }) => {
            let _ = out.write_all(stdout.as_bytes());
            for n in notes {
                let _ = writeln!(err, "{n}");
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            commands::exit_code_for(&e)
        }
    }
}
