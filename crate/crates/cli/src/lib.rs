//! Command-line front end: polynomial parser, subcommands and JSON output.
//!
//! Exit codes: 0 on success, 1 when the computation fails (a reducible
//! modulus, an unsupported degree, an I/O error), 2 on a usage error.

pub mod commands;
pub mod parse;

use std::process::ExitCode;

use clap::Parser;
use thiserror::Error;

pub use commands::{run, Cli, Command};
pub use parse::{parse_poly, ParseError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] galois_core::Error),
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

/// Parses `args`, runs the command and prints its JSON result.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // help and version go to stdout with exit 0
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(cli.command) {
        Ok(value) => {
            println!("{value}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
