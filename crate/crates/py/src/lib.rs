//! Python module `tsa`: the tangent search optimizer, its benchmark functions
//! and the rank tests.
//!
//! ```python
//! import tsa
//!
//! cfg = tsa.TsaConfig(max_fe=10_000)
//! r = tsa.run("fc16", cfg, seed=1)
//! print(r.best_fitness, r.best_position)
//!
//! r = tsa.optimize(lambda x: sum(v * v for v in x), [(-5.0, 5.0)] * 3, cfg)
//! ```

use std::sync::{Arc, Mutex};

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use tsa_core::rng::{RngStream, UniformSource};
use tsa_core::stats::{self, SampleSet, StatTestResult};
use tsa_core::testbed::{self, Suite};
use tsa_core::tsa::{ConvergenceTrace, RunSummary};
use tsa_core::{Bounds, EscapeClock, Error, Objective, Problem};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::BudgetExhausted { .. } => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// Optimizer parameters. Every argument defaults to the standard setting.
#[pyclass(name = "TsaConfig", module = "tsa", from_py_object)]
#[derive(Clone)]
pub struct PyTsaConfig {
    #[pyo3(get, set)]
    pub pop_size: usize,
    #[pyo3(get, set)]
    pub max_fe: u64,
    #[pyo3(get, set)]
    pub p_switch: f64,
    #[pyo3(get, set)]
    pub p_esc: f64,
    #[pyo3(get, set)]
    pub p_restart: f64,
    #[pyo3(get, set)]
    pub theta_max_intens: f64,
    #[pyo3(get, set)]
    pub theta_max_explore: f64,
    #[pyo3(get, set)]
    pub theta_max_escape: f64,
    #[pyo3(get, set)]
    pub replace_fraction_large: f64,
    #[pyo3(get, set)]
    pub replace_fraction_small: f64,
    #[pyo3(get, set)]
    pub small_dim_threshold: usize,
    /// "evaluations" or "iterations".
    #[pyo3(get, set)]
    pub escape_clock: String,
}

fn clock_name(c: EscapeClock) -> &'static str {
    match c {
        EscapeClock::Iterations => "iterations",
        EscapeClock::Evaluations => "evaluations",
    }
}

impl From<tsa_core::TsaConfig> for PyTsaConfig {
    fn from(c: tsa_core::TsaConfig) -> Self {
        Self {
            pop_size: c.pop_size,
            max_fe: c.max_fe,
            p_switch: c.p_switch,
            p_esc: c.p_esc,
            p_restart: c.p_restart,
            theta_max_intens: c.theta_max_intens,
            theta_max_explore: c.theta_max_explore,
            theta_max_escape: c.theta_max_escape,
            replace_fraction_large: c.replace_fraction_large,
            replace_fraction_small: c.replace_fraction_small,
            small_dim_threshold: c.small_dim_threshold,
            escape_clock: clock_name(c.escape_clock).to_string(),
        }
    }
}

impl PyTsaConfig {
    pub fn to_core(&self) -> PyResult<tsa_core::TsaConfig> {
        let escape_clock = match self.escape_clock.as_str() {
            "evaluations" => EscapeClock::Evaluations,
            "iterations" => EscapeClock::Iterations,
            other => {
                return Err(PyValueError::new_err(format!(
                    "escape_clock must be 'evaluations' or 'iterations', got {other:?}"
                )))
            }
        };
        let c = tsa_core::TsaConfig {
            pop_size: self.pop_size,
            max_fe: self.max_fe,
            p_switch: self.p_switch,
            p_esc: self.p_esc,
            p_restart: self.p_restart,
            theta_max_intens: self.theta_max_intens,
            theta_max_explore: self.theta_max_explore,
            theta_max_escape: self.theta_max_escape,
            replace_fraction_large: self.replace_fraction_large,
            replace_fraction_small: self.replace_fraction_small,
            small_dim_threshold: self.small_dim_threshold,
            escape_clock,
        };
        c.validate().map_err(to_py)?;
        Ok(c)
    }
}

#[pymethods]
impl PyTsaConfig {
    #[new]
    #[pyo3(signature = (
        max_fe=None, pop_size=None, p_switch=None, p_esc=None, p_restart=None,
        theta_max_intens=None, theta_max_explore=None, theta_max_escape=None,
        replace_fraction_large=None, replace_fraction_small=None,
        small_dim_threshold=None, escape_clock=None,
    ))]
    #[allow(clippy::too_many_arguments)]
    fn new(
        max_fe: Option<u64>,
        pop_size: Option<usize>,
        p_switch: Option<f64>,
        p_esc: Option<f64>,
        p_restart: Option<f64>,
        theta_max_intens: Option<f64>,
        theta_max_explore: Option<f64>,
        theta_max_escape: Option<f64>,
        replace_fraction_large: Option<f64>,
        replace_fraction_small: Option<f64>,
        small_dim_threshold: Option<usize>,
        escape_clock: Option<String>,
    ) -> PyResult<Self> {
        let mut c = PyTsaConfig::from(tsa_core::TsaConfig::default());
        c.max_fe = max_fe.unwrap_or(c.max_fe);
        c.pop_size = pop_size.unwrap_or(c.pop_size);
        c.p_switch = p_switch.unwrap_or(c.p_switch);
        c.p_esc = p_esc.unwrap_or(c.p_esc);
        c.p_restart = p_restart.unwrap_or(c.p_restart);
        c.theta_max_intens = theta_max_intens.unwrap_or(c.theta_max_intens);
        c.theta_max_explore = theta_max_explore.unwrap_or(c.theta_max_explore);
        c.theta_max_escape = theta_max_escape.unwrap_or(c.theta_max_escape);
        c.replace_fraction_large = replace_fraction_large.unwrap_or(c.replace_fraction_large);
        c.replace_fraction_small = replace_fraction_small.unwrap_or(c.replace_fraction_small);
        c.small_dim_threshold = small_dim_threshold.unwrap_or(c.small_dim_threshold);
        if let Some(clock) = escape_clock {
            c.escape_clock = clock;
        }
        c.to_core()?;
        Ok(c)
    }

    /// Raises ValueError when a field is out of range.
    fn validate(&self) -> PyResult<()> {
        self.to_core().map(|_| ())
    }

    fn __repr__(&self) -> String {
        format!(
            "TsaConfig(max_fe={}, pop_size={}, p_switch={}, p_esc={}, p_restart={}, escape_clock={:?})",
            self.max_fe, self.pop_size, self.p_switch, self.p_esc, self.p_restart, self.escape_clock
        )
    }
}

/// Outcome of one run.
#[pyclass(name = "RunResult", module = "tsa", get_all, skip_from_py_object)]
#[derive(Clone)]
pub struct PyRunResult {
    pub best_fitness: f64,
    pub best_position: Vec<f64>,
    pub used_fe: u64,
    pub iterations: u64,
    pub seed: u64,
    pub wall_time: f64,
    /// `(used_fe, best_so_far)` pairs, sampled every `trace_stride` evaluations.
    pub trace: Vec<(u64, f64)>,
}

impl PyRunResult {
    fn new(s: RunSummary, t: &ConvergenceTrace, stride: u64) -> Self {
        Self {
            best_fitness: s.best_fitness,
            best_position: s.best_position,
            used_fe: s.used_fe,
            iterations: s.iterations,
            seed: s.seed,
            wall_time: s.wall_time,
            trace: t.sampled(stride),
        }
    }
}

#[pymethods]
impl PyRunResult {
    fn __repr__(&self) -> String {
        format!(
            "RunResult(best_fitness={:e}, used_fe={}, iterations={}, seed={})",
            self.best_fitness, self.used_fe, self.iterations, self.seed
        )
    }
}

fn config_or_default(config: Option<PyTsaConfig>) -> PyResult<tsa_core::TsaConfig> {
    match config {
        Some(c) => c.to_core(),
        None => Ok(tsa_core::TsaConfig::default()),
    }
}

fn check_stride(stride: u64) -> PyResult<()> {
    if stride == 0 {
        return Err(PyValueError::new_err("trace_stride must be at least 1"));
    }
    Ok(())
}

/// Runs the optimizer on a registered test function.
#[pyfunction]
#[pyo3(signature = (function_id, config=None, seed=0, dim=None, trace_stride=10))]
fn run(
    py: Python<'_>,
    function_id: &str,
    config: Option<PyTsaConfig>,
    seed: u64,
    dim: Option<usize>,
    trace_stride: u64,
) -> PyResult<PyRunResult> {
    check_stride(trace_stride)?;
    let f = testbed::by_id(function_id).map_err(to_py)?;
    let problem = match dim {
        Some(d) => f.problem_with_dimension(d).map_err(to_py)?,
        None => f.problem(),
    };
    let cfg = config_or_default(config)?;
    let (s, t) = py
        .detach(|| tsa_core::run(&problem, &cfg, seed))
        .map_err(to_py)?;
    Ok(PyRunResult::new(s, &t, trace_stride))
}

struct Callback {
    func: Py<PyAny>,
    error: Arc<Mutex<Option<PyErr>>>,
}

impl Objective for Callback {
    fn value(&self, x: &[f64], _noise: &mut dyn UniformSource) -> f64 {
        let mut slot = self.error.lock().unwrap();
        if slot.is_some() {
            return f64::NAN;
        }
        Python::attach(|py| {
            match self
                .func
                .call1(py, (x.to_vec(),))
                .and_then(|r| r.bind(py).extract::<f64>().map_err(PyErr::from))
            {
                Ok(v) => v,
                Err(e) => {
                    *slot = Some(e);
                    f64::NAN
                }
            }
        })
    }
}

/// Minimizes a Python callable `func(list[float]) -> float` over a box.
///
/// `bounds` is a sequence of `(lower, upper)` pairs, one per variable. An
/// exception raised by `func` aborts the run and is re-raised.
#[pyfunction]
#[pyo3(signature = (func, bounds, config=None, seed=0, trace_stride=10))]
fn optimize(
    func: Py<PyAny>,
    bounds: Vec<(f64, f64)>,
    config: Option<PyTsaConfig>,
    seed: u64,
    trace_stride: u64,
) -> PyResult<PyRunResult> {
    check_stride(trace_stride)?;
    let bounds = bounds
        .into_iter()
        .map(|(lb, ub)| Bounds::new(lb, ub))
        .collect::<Result<Vec<_>, _>>()
        .map_err(to_py)?;
    let error = Arc::new(Mutex::new(None));
    let objective = Callback {
        func,
        error: Arc::clone(&error),
    };
    let problem = Problem::new("callable", bounds, objective).map_err(to_py)?;
    let cfg = config_or_default(config)?;
    let outcome = tsa_core::run(&problem, &cfg, seed);
    if let Some(e) = error.lock().unwrap().take() {
        return Err(e);
    }
    let (s, t) = outcome.map_err(to_py)?;
    Ok(PyRunResult::new(s, &t, trace_stride))
}

/// Value of a registered test function at `x`. Quartic's noise is drawn
/// from a stream seeded with `noise_seed`.
#[pyfunction]
#[pyo3(signature = (function_id, x, noise_seed=0))]
fn evaluate(function_id: &str, x: Vec<f64>, noise_seed: u64) -> PyResult<f64> {
    let f = testbed::by_id(function_id).map_err(to_py)?;
    f.eval(&x, &mut RngStream::new(noise_seed)).map_err(to_py)
}

/// Known optimizer of a test function at dimension `dim` (default dimension if omitted).
#[pyfunction]
#[pyo3(signature = (function_id, dim=None))]
fn known_optimizer(function_id: &str, dim: Option<usize>) -> PyResult<Option<Vec<f64>>> {
    let f = testbed::by_id(function_id).map_err(to_py)?;
    Ok(f.known_optimizer(dim.unwrap_or(f.default_dimension())))
}

/// Registered functions as dicts, optionally only one suite
/// ("classical30", "fixed" or "hard").
#[pyfunction]
#[pyo3(signature = (suite=None))]
fn list_functions<'py>(py: Python<'py>, suite: Option<&str>) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let all = testbed::all_functions();
    let keep: Vec<_> = match suite {
        None => all,
        Some("classical30") => all
            .into_iter()
            .filter(|f| f.suite() == Suite::Classical && f.is_scalable())
            .collect(),
        Some("fixed") => all
            .into_iter()
            .filter(|f| f.suite() == Suite::Classical && !f.is_scalable())
            .collect(),
        Some("hard") => testbed::hard_suite(),
        Some(other) => {
            return Err(PyValueError::new_err(format!(
                "unknown suite {other:?} (expected classical30, fixed or hard)"
            )))
        }
    };
    keep.iter()
        .map(|f| {
            let d = PyDict::new(py);
            d.set_item("id", f.id())?;
            d.set_item("name", f.name())?;
            d.set_item("dimension", f.default_dimension())?;
            let b: Vec<(f64, f64)> = f.bounds().iter().map(|b| (b.lb, b.ub)).collect();
            d.set_item("bounds", b)?;
            d.set_item("optimum", f.optimum_for(f.default_dimension()))?;
            d.set_item("modality", format!("{:?}", f.modality()))?;
            d.set_item("scalable", f.is_scalable())?;
            Ok(d)
        })
        .collect()
}

/// Result of a rank test.
#[pyclass(name = "StatResult", module = "tsa", get_all, skip_from_py_object)]
#[derive(Clone)]
pub struct PyStatResult {
    pub statistic: f64,
    pub p_value: f64,
    pub reject: bool,
    pub alpha: f64,
    /// "+", "-" or "=".
    pub direction: String,
    pub mean_ranks: Vec<f64>,
}

impl From<StatTestResult> for PyStatResult {
    fn from(r: StatTestResult) -> Self {
        Self {
            statistic: r.statistic,
            p_value: r.p_value,
            reject: r.reject,
            alpha: r.alpha,
            direction: r.direction.to_string(),
            mean_ranks: r.mean_ranks,
        }
    }
}

#[pymethods]
impl PyStatResult {
    fn __repr__(&self) -> String {
        format!(
            "StatResult(statistic={}, p_value={}, reject={}, direction={:?})",
            self.statistic, self.p_value, self.reject, self.direction
        )
    }
}

fn sample(label: &str, v: Vec<f64>) -> PyResult<SampleSet> {
    SampleSet::new(label, v).map_err(to_py)
}

/// Two-sided signed-rank test on paired samples; '+' means `a` is lower.
#[pyfunction]
#[pyo3(signature = (a, b, alpha=stats::ALPHA))]
fn wilcoxon(a: Vec<f64>, b: Vec<f64>, alpha: f64) -> PyResult<PyStatResult> {
    let r = stats::wilcoxon_signed_rank(&sample("a", a)?, &sample("b", b)?, alpha).map_err(to_py)?;
    Ok(r.into())
}

/// Kruskal-Wallis H test over two or more groups.
#[pyfunction]
#[pyo3(signature = (groups, alpha=stats::ALPHA))]
fn kruskal(groups: Vec<Vec<f64>>, alpha: f64) -> PyResult<PyStatResult> {
    let sets = groups
        .into_iter()
        .enumerate()
        .map(|(i, g)| sample(&format!("g{i}"), g))
        .collect::<PyResult<Vec<_>>>()?;
    Ok(stats::kruskal_wallis(&sets, alpha).map_err(to_py)?.into())
}

/// Scales each row to [0, 1]; constant rows become zeros.
#[pyfunction]
fn normalize_scores(rows: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    stats::normalize_scores(&rows)
}

/// `(mean, std, best)` with the n-1 standard deviation.
#[pyfunction]
fn summarize(values: Vec<f64>) -> PyResult<(f64, f64, f64)> {
    let s = stats::summarize(&sample("values", values)?);
    Ok((s.mean, s.std, s.best))
}

#[pymodule]
pub fn tsa(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyTsaConfig>()?;
    m.add_class::<PyRunResult>()?;
    m.add_class::<PyStatResult>()?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add_function(wrap_pyfunction!(optimize, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(known_optimizer, m)?)?;
    m.add_function(wrap_pyfunction!(list_functions, m)?)?;
    m.add_function(wrap_pyfunction!(wilcoxon, m)?)?;
    m.add_function(wrap_pyfunction!(kruskal, m)?)?;
    m.add_function(wrap_pyfunction!(normalize_scores, m)?)?;
    m.add_function(wrap_pyfunction!(summarize, m)?)?;
    Ok(())
}
