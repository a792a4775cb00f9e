//! Command-line front end: text grammars for groups and edge sets, JSON and TSV output, and the
//! subcommands behind the `reciprocity` binary.

pub mod commands;
pub mod error;
pub mod examples;
pub mod output;
pub mod spec;

pub use error::CliError;
pub use output::{Format, Output};
