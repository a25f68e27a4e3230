use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use tsa_core::testbed::{self, Suite, TestFunction};
use tsa_core::TsaConfig;

use crate::error::{BenchError, Result};

/// Budget for the 30-dimensional and hard functions.
pub const SCALABLE_MAX_FE: u64 = 50_000;
/// Budget for the low-dimensional classical functions.
pub const FIXED_MAX_FE: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteKind {
    /// fc01-fc12 at D = 30.
    #[serde(rename = "classical30")]
    Classical30,
    /// fc13-fc20.
    Fixed,
    /// h01-h05.
    Hard,
    /// Explicit `function_ids`.
    Custom,
}

impl SuiteKind {
    pub const ALL: [SuiteKind; 4] = [
        SuiteKind::Classical30,
        SuiteKind::Fixed,
        SuiteKind::Hard,
        SuiteKind::Custom,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteKind::Classical30 => "classical30",
            SuiteKind::Fixed => "fixed",
            SuiteKind::Hard => "hard",
            SuiteKind::Custom => "custom",
        }
    }

    /// Registered functions of a named suite; `Custom` has none.
    pub fn functions(self) -> Vec<TestFunction> {
        let all = testbed::all_functions();
        match self {
            SuiteKind::Classical30 => all
                .into_iter()
                .filter(|f| f.suite() == Suite::Classical && f.is_scalable())
                .collect(),
            SuiteKind::Fixed => all
                .into_iter()
                .filter(|f| f.suite() == Suite::Classical && !f.is_scalable())
                .collect(),
            SuiteKind::Hard => testbed::hard_suite(),
            SuiteKind::Custom => Vec::new(),
        }
    }
}

impl fmt::Display for SuiteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteKind {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self> {
        SuiteKind::ALL
            .into_iter()
            .find(|k| k.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                BenchError::Config(format!(
                    "unknown suite `{s}` (expected classical30, fixed, hard or custom)"
                ))
            })
    }
}

/// Default evaluation budget for a function.
pub fn default_max_fe(f: &TestFunction) -> u64 {
    if f.suite() == Suite::Classical && !f.is_scalable() {
        FIXED_MAX_FE
    } else {
        SCALABLE_MAX_FE
    }
}

/// One experiment, usually read from a JSON file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub suite: SuiteKind,
    pub function_ids: Option<Vec<String>>,
    pub runs: u32,
    /// Overrides the per-function default budget for every function.
    pub max_fe: Option<u64>,
    /// Per-function budgets, taking precedence over `max_fe`.
    pub function_max_fe: BTreeMap<String, u64>,
    pub tsa: TsaConfig,
    pub base_seed: u64,
    pub output_dir: PathBuf,
    pub trace_stride: u64,
    /// Worker threads; all cores when unset.
    pub jobs: Option<usize>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            suite: SuiteKind::Classical30,
            function_ids: None,
            runs: 30,
            max_fe: None,
            function_max_fe: BTreeMap::new(),
            tsa: TsaConfig::default(),
            base_seed: 0,
            output_dir: PathBuf::from("results"),
            trace_stride: 10,
            jobs: None,
        }
    }
}

/// A function together with the budget it runs under.
#[derive(Debug, Clone)]
pub struct Task {
    pub function: TestFunction,
    pub max_fe: u64,
}

impl ExperimentConfig {
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| BenchError::io(path, e))?;
        serde_json::from_str(&text)
            .map_err(|e| BenchError::Config(format!("{}: {e}", path.display())))
    }

    /// Seed of run `run_index`: `base_seed + run_index`.
    pub fn run_seed(&self, run_index: u32) -> u64 {
        self.base_seed.wrapping_add(run_index as u64)
    }

    /// Resolves the function list and budgets, checking everything up front.
    pub fn tasks(&self) -> Result<Vec<Task>> {
        if self.runs == 0 {
            return Err(BenchError::Config("runs must be at least 1".into()));
        }
        if self.trace_stride == 0 {
            return Err(BenchError::Config("trace_stride must be at least 1".into()));
        }
        if self.jobs == Some(0) {
            return Err(BenchError::Config("jobs must be at least 1".into()));
        }
        let ids = self.function_ids.as_deref().unwrap_or_default();
        let functions = match self.suite {
            SuiteKind::Custom => {
                if ids.is_empty() {
                    return Err(BenchError::Config(
                        "suite `custom` needs a non-empty function_ids list".into(),
                    ));
                }
                let unknown: Vec<String> = ids
                    .iter()
                    .filter(|id| testbed::by_id(id).is_err())
                    .cloned()
                    .collect();
                if !unknown.is_empty() {
                    return Err(BenchError::UnknownFunctions(unknown));
                }
                let mut out: Vec<TestFunction> = Vec::new();
                for id in ids {
                    let f = testbed::by_id(id)?;
                    if !out.iter().any(|g| g.id() == f.id()) {
                        out.push(f);
                    }
                }
                out
            }
            kind => {
                if !ids.is_empty() {
                    return Err(BenchError::Config(format!(
                        "function_ids is only used with suite `custom`, not `{kind}`"
                    )));
                }
                kind.functions()
            }
        };
        let unknown: Vec<String> = self
            .function_max_fe
            .keys()
            .filter(|id| !functions.iter().any(|f| f.id() == id.as_str()))
            .cloned()
            .collect();
        if !unknown.is_empty() {
            return Err(BenchError::UnknownFunctions(unknown));
        }

        let mut tasks = Vec::with_capacity(functions.len());
        for function in functions {
            let max_fe = self
                .function_max_fe
                .get(function.id())
                .copied()
                .or(self.max_fe)
                .unwrap_or_else(|| default_max_fe(&function));
            let tsa = TsaConfig {
                max_fe,
                ..self.tsa.clone()
            };
            tsa.validate().map_err(|e| {
                BenchError::Config(format!("{}: {e}", function.id()))
            })?;
            tasks.push(Task { function, max_fe });
        }
        Ok(tasks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_sizes() {
        assert_eq!(SuiteKind::Classical30.functions().len(), 12);
        assert_eq!(SuiteKind::Fixed.functions().len(), 8);
        assert_eq!(SuiteKind::Hard.functions().len(), 5);
    }

    #[test]
    fn default_budgets() {
        let cfg = ExperimentConfig {
            suite: SuiteKind::Custom,
            function_ids: Some(vec!["fc01".into(), "fc16".into(), "h02".into()]),
            ..Default::default()
        };
        let fe: Vec<u64> = cfg.tasks().unwrap().iter().map(|t| t.max_fe).collect();
        assert_eq!(fe, [50_000, 10_000, 50_000]);
    }

    #[test]
    fn per_function_budget_wins() {
        let mut cfg = ExperimentConfig {
            suite: SuiteKind::Fixed,
            max_fe: Some(500),
            ..Default::default()
        };
        cfg.function_max_fe.insert("fc13".into(), 700);
        let tasks = cfg.tasks().unwrap();
        assert_eq!(tasks[0].max_fe, 700);
        assert!(tasks[1..].iter().all(|t| t.max_fe == 500));
    }

    #[test]
    fn unknown_ids_are_all_listed() {
        let cfg = ExperimentConfig {
            suite: SuiteKind::Custom,
            function_ids: Some(vec!["fc01".into(), "nope".into(), "zz".into()]),
            ..Default::default()
        };
        match cfg.tasks() {
            Err(BenchError::UnknownFunctions(ids)) => assert_eq!(ids, ["nope", "zz"]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_bad_values() {
        let bad = [
            ExperimentConfig { runs: 0, ..Default::default() },
            ExperimentConfig { trace_stride: 0, ..Default::default() },
            ExperimentConfig { max_fe: Some(5), ..Default::default() },
            ExperimentConfig { suite: SuiteKind::Custom, ..Default::default() },
            ExperimentConfig { function_ids: Some(vec!["fc01".into()]), ..Default::default() },
        ];
        for cfg in bad {
            assert_eq!(cfg.tasks().unwrap_err().exit_code(), 2, "{cfg:?}");
        }
    }

    #[test]
    fn json_round_trip_and_partial_files() {
        let cfg: ExperimentConfig =
            serde_json::from_str(r#"{"suite": "hard", "runs": 3, "tsa": {"p_esc": 0.5}}"#).unwrap();
        assert_eq!(cfg.suite, SuiteKind::Hard);
        assert_eq!(cfg.tsa.p_esc, 0.5);
        assert_eq!(cfg.tsa.pop_size, 20);
        let back: ExperimentConfig = serde_json::from_str(&serde_json::to_string(&cfg).unwrap()).unwrap();
        assert_eq!(back, cfg);
        assert!(serde_json::from_str::<ExperimentConfig>(r#"{"rnus": 3}"#).is_err());
    }

    #[test]
    fn seeds_follow_the_run_index() {
        let cfg = ExperimentConfig { base_seed: 100, ..Default::default() };
        assert_eq!(cfg.run_seed(0), 100);
        assert_eq!(cfg.run_seed(7), 107);
    }
}
