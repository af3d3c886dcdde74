//! Text formats, certificate rendering and the command-line front end for
//! `unigen-core`.

pub mod app;
pub mod format;
pub mod render;

pub use app::{run, Cli, CliError, Command, Outcome, OutputFormat};
