//! File formats, reports, table rendering and the `runexp` command line on
//! top of `runexp-core`.

pub mod cli;
pub mod error;
pub mod formats;
pub mod report;
pub mod tables;

pub use error::{CliError, FormatError};
