//! File formats, reports and verification suites for the `rml` binary.

pub mod commands;
pub mod error;
pub mod report;
pub mod rmc;
pub mod suites;

pub use error::CliError;
pub use report::{Entry, Provenance, Report};
