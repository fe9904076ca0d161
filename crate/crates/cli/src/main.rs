//! `kgfca`: dump → formal context → implication and association-rule bases.
//!
//! Data goes to files or standard output, progress and statistics to
//! standard error. Exit codes: 0 success or entailed, 1 not entailed or
//! incomplete, 2 usage or validation error, 3 I/O or parse failure.

mod args;
mod commands;
mod extract;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

/// An error with the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

impl Failure {
    pub fn usage(error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code: 2,
            error: error.into(),
        }
    }

    pub fn io(error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code: 3,
            error: error.into(),
        }
    }

    pub fn context(self, what: impl std::fmt::Display) -> Self {
        Failure {
            code: self.code,
            error: self.error.context(what.to_string()),
        }
    }
}

impl From<kgfca::Error> for Failure {
    fn from(e: kgfca::Error) -> Self {
        use kgfca::Error::*;
        match e {
            Io(_) | Record { .. } | Truncated { .. } | Format { .. } => Failure::io(e),
            InvalidId(_)
            | UnknownAttribute(_)
            | EmptyContext
            | UndefinedConfidence
            | CapExceeded { .. }
            | InvalidParameter(_) => Failure::usage(e),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::io(e)
    }
}

pub type Outcome = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Context(a) => commands::context(a),
        Command::Base(a) => commands::base(a),
        Command::Luxenburger(a) => commands::luxenburger(a),
        Command::Pac(a) => commands::pac(a),
        Command::Entails(a) => commands::entails(a),
    };
    match outcome {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
