//! Library half of the `pga` command-line tool.

pub mod commands;
pub mod error;
pub mod expr;
pub mod scene;

pub use error::CliError;
