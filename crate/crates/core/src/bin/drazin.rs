use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use drazin::commands::{self, Outcome, EXIT_BAD_INPUT};

/// Exact Drazin inverses and idempotent equivalence checks.
#[derive(Parser)]
#[command(name = "drazin", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Drazin inverse and index of an element read from FILE or stdin.
    Compute { file: Option<PathBuf> },
    /// Check the equivalence theorems over a ring's idempotents.
    Verify {
        /// Ring descriptor as JSON text, or a path to a file holding it.
        ring: String,
        #[arg(long, default_value = "all")]
        theorem: String,
        /// Entry bound for the M_2(Z) idempotent family.
        #[arg(long)]
        bound: Option<u64>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Cross-validate the engine against brute force on every element.
    Oracle {
        ring: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// List the idempotents of a ring.
    Idempotents {
        ring: String,
        #[arg(long)]
        bound: Option<u64>,
    },
}

fn read_source(arg: &str) -> Result<String, Outcome> {
    if arg.trim_start().starts_with('{') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(arg).map_err(|e| Outcome::error(EXIT_BAD_INPUT, format!("cannot read {arg}: {e}")))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Compute { file } => {
            let input = match file {
                Some(path) => std::fs::read_to_string(&path)
                    .map_err(|e| Outcome::error(EXIT_BAD_INPUT, format!("cannot read {}: {e}", path.display()))),
                None => {
                    let mut buf = String::new();
                    std::io::stdin()
                        .read_to_string(&mut buf)
                        .map(|_| buf)
                        .map_err(|e| Outcome::error(EXIT_BAD_INPUT, format!("cannot read stdin: {e}")))
                }
            };
            match input {
                Ok(text) => commands::compute(&text),
                Err(o) => o,
            }
        }
        Command::Verify { ring, theorem, bound, jobs } => match read_source(&ring) {
            Ok(text) => commands::verify(&text, &theorem, bound, jobs),
            Err(o) => o,
        },
        Command::Oracle { ring, jobs } => match read_source(&ring) {
            Ok(text) => commands::oracle(&text, jobs),
            Err(o) => o,
        },
        Command::Idempotents { ring, bound } => match read_source(&ring) {
            Ok(text) => commands::idempotents(&text, bound),
            Err(o) => o,
        },
    }
}

fn main() -> ExitCode {
    let outcome = match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            e.exit();
        }
        Err(e) => Outcome::error(EXIT_BAD_INPUT, e.to_string().trim_end()),
    };
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(outcome.code as u8)
}
