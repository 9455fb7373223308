//! Command-line front end: argument parsing, job configuration and report rendering.

pub mod args;
pub mod config;
pub mod error;
pub mod run;

pub use args::Cli;
pub use config::{FieldSpec, Format, JobConfig, Task};
pub use error::CliError;
pub use run::{execute, execute_to_output};
