//! File formats and command-line surface for `laneplan-core`.

pub mod census;
pub mod chart;
pub mod commands;
pub mod config;
pub mod error;
pub mod json;
pub mod vehicle_file;

pub use commands::{run, Cli};
pub use error::{CliError, Result};
