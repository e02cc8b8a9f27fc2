//! Command-line front end for `sympair-core`: the `AlgebraSpec` input format,
//! the builtin catalog, the pipeline commands and their reports.

pub mod commands;
pub mod error;
pub mod input;
pub mod report;

pub use commands::{run, Command, Options};
pub use error::CliError;
pub use input::{resolve_target, AlgebraSpec};
pub use report::Report;
