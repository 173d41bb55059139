mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;

/// Failures and the exit status each maps to.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Resource(anyhow::Error),
    Network(anyhow::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Resource(_) => 3,
            Failure::Network(_) => 4,
        }
    }
}

impl From<ckb_spell::lexfmt::LoadError> for Failure {
    fn from(err: ckb_spell::lexfmt::LoadError) -> Self {
        Failure::Resource(err.into())
    }
}

impl From<anyhow::Error> for Failure {
    fn from(err: anyhow::Error) -> Self {
        Failure::Resource(err)
    }
}

/// Whether the command found spelling errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Clean,
    Errors,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(Verdict::Clean) => ExitCode::SUCCESS,
        Ok(Verdict::Errors) => ExitCode::from(1),
        Err(failure) => {
            match &failure {
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Resource(err) | Failure::Network(err) => eprintln!("error: {err:#}"),
            }
            ExitCode::from(failure.code())
        }
    }
}
