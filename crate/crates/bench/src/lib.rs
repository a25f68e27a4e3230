//! Experiment harness for the tangent search optimizer.
//!
//! The `tsa-bench` binary wraps these modules: [`runner`] executes seeded batches
//! and writes traces and summaries, [`compare`] runs the rank tests over result
//! files, [`scatter`] emits tangent-flight samples and [`listing`] prints the
//! registered test functions.

pub mod compare;
pub mod config;
pub mod error;
pub mod listing;
pub mod results;
pub mod runner;
pub mod scatter;

pub use config::{ExperimentConfig, SuiteKind};
pub use error::{BenchError, Result};
pub use results::{ReportRow, ResultsFile};
