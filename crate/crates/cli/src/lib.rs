//! Command-line front end: JSON algebra documents, single queries and
//! theorem sweeps, all reported as deterministic JSON.

pub mod args;
pub mod commands;
pub mod document;
pub mod report;
pub mod sweep;

pub use args::Cli;
pub use commands::{run, Output};
