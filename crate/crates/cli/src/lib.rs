//! Library half of the `seccat` binary: input loading, command handlers
//! and the seeded law runner.

pub mod commands;
pub mod error;
pub mod input;
pub mod laws;
pub mod spec;

pub use error::CliError;
pub use laws::{run_laws, LawConfig, LawReport, LawResult, Suite};
