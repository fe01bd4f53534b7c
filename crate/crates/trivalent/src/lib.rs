//! Command line, file formats and caching for `trivalent-core`.

pub mod cache;
pub mod cli;
pub mod format;
pub mod sampling;

pub use cli::{run, RunOutcome};
