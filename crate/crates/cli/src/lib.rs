//! Command line front end: every subcommand produces a [`Certificate`].

pub mod args;
pub mod certificate;
pub mod commands;
pub mod corpus;

use std::path::PathBuf;

pub use args::{Cli, Command};
pub use certificate::{Certificate, Check};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("malformed JSON in {path}: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
    #[error(transparent)]
    Group(#[from] zariski::groups::GroupError),
    #[error(transparent)]
    Cyclo(#[from] zariski::cyclotomic::CycloError),
    #[error(transparent)]
    Curve(#[from] zariski::curves::CurveError),
}

impl CliError {
    /// Errors in the invocation itself exit with 2; failed checks exit with 1.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

/// Parses `argv` (without the program name) and runs the subcommand.
pub fn run_args<I, S>(argv: I) -> Result<Certificate, CliError>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    use clap::Parser;
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = Cli::try_parse_from(std::iter::once("zariski".to_string()).chain(argv.iter().cloned()))
        .map_err(|e| CliError::Usage(e.to_string()))?;
    commands::run(&cli.command, argv)
}
