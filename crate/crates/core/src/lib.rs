//! Tangent search global optimization.
//!
//! * [`problem`]: box-bounded problems, evaluation budgets and search agents.
//! * [`rng`]: seeded uniform streams shared by every stochastic step.
//! * [`tsa`]: the optimizer (intensification, exploration, escape) and run traces.
//! * [`testbed`]: classical and hard benchmark functions with known optima.
//! * [`stats`]: Wilcoxon signed-rank, Kruskal-Wallis, score normalization.
//!
//! ```
//! use tsa_core::{testbed, tsa::{run, TsaConfig}};
//!
//! let sphere = testbed::by_id("fc01").unwrap().problem_with_dimension(2).unwrap();
//! let (summary, trace) = run(&sphere, &TsaConfig::with_budget(2_000), 7).unwrap();
//! assert_eq!(summary.used_fe, 2_000);
//! assert!(trace.is_monotone());
//! ```

pub mod error;
pub mod problem;
pub mod rng;
pub mod stats;
pub mod testbed;
pub mod tsa;

pub use error::{Error, Result};
pub use problem::{Bounds, EvaluationBudget, Objective, Problem, SearchAgent};
pub use rng::{RngStream, ScriptedDraws, UniformSource};
pub use stats::{SampleSet, StatTestResult};
pub use testbed::TestFunction;
pub use tsa::{run, ConvergenceTrace, EscapeClock, RunSummary, Tsa, TsaConfig};
