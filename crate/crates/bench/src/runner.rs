//! Seeded batch runs over a suite.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use tsa_core::stats::{summarize, SampleSet};
use tsa_core::tsa::run;
use tsa_core::TsaConfig;

use crate::config::{ExperimentConfig, Task};
use crate::error::{BenchError, Result};
use crate::results::{csv_error, write_summary, FunctionResults, ResultsFile, RunRecord};

pub const SUMMARY_FILE: &str = "summary.csv";
pub const RESULTS_FILE: &str = "results.json";
pub const TRACE_DIR: &str = "traces";

/// Output of a single (function, run) task.
#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub task: usize,
    pub record: RunRecord,
    /// Best-so-far sampled every `trace_stride` evaluations, final one always kept.
    pub trace: Vec<(u64, f64)>,
}

/// Paths written by [`run_experiment`].
#[derive(Debug, Clone)]
pub struct Written {
    pub summary: PathBuf,
    pub results: PathBuf,
    pub traces: Vec<PathBuf>,
}

pub fn trace_file_name(function_id: &str, run: u32) -> String {
    format!("{function_id}_run{run:03}.csv")
}

/// Executes every run of the experiment without touching the file system.
pub fn execute(config: &ExperimentConfig) -> Result<(ResultsFile, Vec<RunOutcome>)> {
    let tasks = config.tasks()?;
    let jobs: Vec<(usize, u32)> = (0..tasks.len())
        .flat_map(|t| (0..config.runs).map(move |r| (t, r)))
        .collect();

    let work = || -> Result<Vec<RunOutcome>> {
        jobs.par_iter()
            .map(|&(t, r)| single_run(config, &tasks[t], t, r))
            .collect()
    };
    let mut outcomes = match config.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| BenchError::Config(format!("cannot start {n} workers: {e}")))?
            .install(work)?,
        None => work()?,
    };
    outcomes.sort_by_key(|o| (o.task, o.record.run));

    let functions = tasks
        .iter()
        .enumerate()
        .map(|(t, task)| {
            let runs: Vec<RunRecord> = outcomes
                .iter()
                .filter(|o| o.task == t)
                .map(|o| o.record.clone())
                .collect();
            let values = SampleSet::new(task.function.id(), runs.iter().map(|r| r.best_fitness).collect())?;
            Ok(FunctionResults {
                function_id: task.function.id().to_string(),
                name: task.function.name().to_string(),
                dimension: task.function.default_dimension(),
                max_fe: task.max_fe,
                summary: summarize(&values),
                runs,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let results = ResultsFile {
        config: config.clone(),
        functions,
    };
    Ok((results, outcomes))
}

fn single_run(config: &ExperimentConfig, task: &Task, index: usize, run_index: u32) -> Result<RunOutcome> {
    let problem = task.function.problem();
    let tsa = TsaConfig {
        max_fe: task.max_fe,
        ..config.tsa.clone()
    };
    let seed = config.run_seed(run_index);
    let (summary, trace) = run(&problem, &tsa, seed)?;
    if !trace.is_monotone() {
        return Err(BenchError::NonMonotoneTrace {
            function: task.function.id().to_string(),
            run: run_index,
        });
    }
    Ok(RunOutcome {
        task: index,
        record: RunRecord {
            run: run_index,
            seed,
            best_fitness: summary.best_fitness,
            used_fe: summary.used_fe,
            iterations: summary.iterations,
            wall_time: summary.wall_time,
            best_position: summary.best_position,
        },
        trace: trace.sampled(config.trace_stride),
    })
}

/// Runs the experiment and writes traces, `summary.csv` and `results.json`
/// under `config.output_dir`.
pub fn run_experiment(config: &ExperimentConfig) -> Result<(ResultsFile, Written)> {
    // resolve everything before any run or directory creation
    config.tasks()?;
    let out = &config.output_dir;
    let trace_dir = out.join(TRACE_DIR);
    fs::create_dir_all(&trace_dir).map_err(|e| BenchError::io(&trace_dir, e))?;

    let (results, outcomes) = execute(config)?;

    let mut traces = Vec::with_capacity(outcomes.len());
    for o in &outcomes {
        let id = &results.functions[o.task].function_id;
        let path = trace_dir.join(trace_file_name(id, o.record.run));
        write_trace(&path, &o.trace)?;
        traces.push(path);
    }
    let summary = out.join(SUMMARY_FILE);
    let rows: Vec<_> = results.functions.iter().map(|f| f.report_row()).collect();
    write_summary(&summary, &rows)?;
    let results_path = out.join(RESULTS_FILE);
    results.save(&results_path)?;

    Ok((
        results,
        Written {
            summary,
            results: results_path,
            traces,
        },
    ))
}

pub fn write_trace(path: &Path, points: &[(u64, f64)]) -> Result<()> {
    if points.windows(2).any(|w| w[1].1 > w[0].1) {
        return Err(BenchError::Format {
            path: path.to_path_buf(),
            message: "best-fitness column is not non-increasing".into(),
        });
    }
    let mut w = csv::Writer::from_path(path).map_err(|e| csv_error(path, e))?;
    w.write_record(["fe", "best"]).map_err(|e| csv_error(path, e))?;
    for &(fe, best) in points {
        w.serialize((fe, best)).map_err(|e| csv_error(path, e))?;
    }
    w.flush().map_err(|e| BenchError::io(path, e))
}

pub fn read_trace(path: &Path) -> Result<Vec<(u64, f64)>> {
    let mut r = csv::Reader::from_path(path).map_err(|e| csv_error(path, e))?;
    r.deserialize()
        .collect::<std::result::Result<Vec<(u64, f64)>, _>>()
        .map_err(|e| csv_error(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::SuiteKind;

    fn small(ids: &[&str]) -> ExperimentConfig {
        ExperimentConfig {
            suite: SuiteKind::Custom,
            function_ids: Some(ids.iter().map(|s| s.to_string()).collect()),
            runs: 3,
            max_fe: Some(400),
            ..Default::default()
        }
    }

    #[test]
    fn runs_are_ordered_and_seeded() {
        let cfg = ExperimentConfig { base_seed: 10, ..small(&["fc01", "fc16"]) };
        let (res, outcomes) = execute(&cfg).unwrap();
        assert_eq!(outcomes.len(), 6);
        assert_eq!(res.function_ids(), ["fc01", "fc16"]);
        let seeds: Vec<u64> = res.functions[1].runs.iter().map(|r| r.seed).collect();
        assert_eq!(seeds, [10, 11, 12]);
        assert!(res.functions.iter().flat_map(|f| &f.runs).all(|r| r.used_fe == 400));
    }

    #[test]
    fn worker_count_does_not_change_numbers() {
        let a = execute(&ExperimentConfig { jobs: Some(1), ..small(&["fc09"]) }).unwrap().0;
        let b = execute(&ExperimentConfig { jobs: Some(4), ..small(&["fc09"]) }).unwrap().0;
        assert_eq!(a.functions[0].best_values(), b.functions[0].best_values());
    }

    #[test]
    fn sampled_trace_keeps_the_final_evaluation() {
        let cfg = ExperimentConfig { trace_stride: 7, ..small(&["fc01"]) };
        let (_, outcomes) = execute(&cfg).unwrap();
        let t = &outcomes[0].trace;
        assert_eq!(t.last().unwrap().0, 400);
        assert!(t[..t.len() - 1].iter().all(|p| p.0 % 7 == 0));
    }

    #[test]
    fn trace_writer_refuses_increasing_best() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("t.csv");
        assert!(write_trace(&p, &[(1, 2.0), (2, 3.0)]).is_err());
        write_trace(&p, &[(1, 2.0), (2, 1.5)]).unwrap();
        assert_eq!(read_trace(&p).unwrap(), vec![(1, 2.0), (2, 1.5)]);
    }
}
