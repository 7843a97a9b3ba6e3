//! Command-line front end for `valdist-core`: the expression language, the
//! instance file formats, and the parallel trial runner.

#![allow(clippy::result_large_err)]

pub mod app;
pub mod dsl;
pub mod io;
pub mod runner;
pub mod suites;

use thiserror::Error;

/// Everything that ends a command with exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] valdist_core::Error),
    #[error(transparent)]
    Expression(#[from] dsl::ElabError),
    #[error("invalid instance file: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<dsl::SyntaxError> for CliError {
    fn from(e: dsl::SyntaxError) -> Self {
        CliError::Expression(e.into())
    }
}
