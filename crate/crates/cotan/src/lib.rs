//! Command-line front end for `cotan-core`: argument parsing, report types
//! and their table/JSON/CSV renderings, and parallel verification sweeps.

pub mod args;
pub mod cli;
pub mod commands;
pub mod error;
pub mod render;
pub mod reports;
pub mod sweep;

pub use cli::{run, Cli};
pub use error::{CliError, ErrorReport};
pub use render::OutputFormat;
