//! Tangent search optimizer.
//!
//! Each iteration sweeps the population once. Every agent takes either the
//! intensification move (a walk around the elite solution followed by copying
//! a share of the elite's coordinates) or the exploration move (sparse
//! per-variable tangent jumps). Afterwards one random agent may go through the
//! escape procedure. All moves produce one candidate, which is repaired into
//! the box, evaluated once and kept only if strictly better than its parent.
//!
//! Step magnitudes decay with the iteration counter `t`:
//!
//! ```text
//! step1 = 10 * s * |best|     * ln(1 + 10 D / t)      (intensification)
//! step2 =  1 * s * |best - x| / ln(20 + t)            (exploration)
//! R     = 10 * s / ln(1 + t)                          (escape)
//! ```
//!
//! where `s` is a random sign and `|.|` the Euclidean norm. By default `t` in
//! `R` counts evaluations rather than iterations; see [`EscapeClock`].

use std::f64::consts::PI;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::problem::{EvaluationBudget, Problem, SearchAgent};
use crate::rng::{RngStream, UniformSource};

/// Norms below this are clamped so step sizes stay finite and non-zero.
pub const NORM_FLOOR: f64 = 1e-30;

/// Stream id used for objective noise, kept apart from the search stream.
const NOISE_STREAM: u64 = 0x6e6f_6973_65;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct TsaConfig {
    pub pop_size: usize,
    pub max_fe: u64,
    /// Probability of intensification rather than exploration, per agent.
    pub p_switch: f64,
    /// Probability of running the escape procedure once per iteration.
    pub p_esc: f64,
    /// Probability that escape replaces the agent with a fresh random solution.
    pub p_restart: f64,
    pub theta_max_intens: f64,
    pub theta_max_explore: f64,
    pub theta_max_escape: f64,
    /// Share of coordinates copied from the elite when `D > small_dim_threshold`.
    pub replace_fraction_large: f64,
    /// Share of coordinates copied from the elite when `D <= small_dim_threshold`.
    pub replace_fraction_small: f64,
    pub small_dim_threshold: usize,
    /// Counter plugged into the escape step `R`.
    pub escape_clock: EscapeClock,
}

/// Which counter drives the escape step `R = 10 s / ln(1 + t)`.
///
/// With `Evaluations`, `R` reaches magnitude 1 after roughly 22,000
/// evaluations, which lets the first escape move contract the elite towards
/// the origin late in a run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EscapeClock {
    Iterations,
    #[default]
    Evaluations,
}

impl Default for TsaConfig {
    fn default() -> Self {
        Self {
            pop_size: 20,
            max_fe: 50_000,
            p_switch: 0.3,
            p_esc: 0.8,
            p_restart: 0.01,
            theta_max_intens: PI / 2.1,
            theta_max_explore: PI / 3.0,
            theta_max_escape: PI / 2.1,
            replace_fraction_large: 0.20,
            replace_fraction_small: 0.50,
            small_dim_threshold: 4,
            escape_clock: EscapeClock::default(),
        }
    }
}

impl TsaConfig {
    pub fn with_budget(max_fe: u64) -> Self {
        Self {
            max_fe,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.pop_size == 0 {
            return bad("pop_size must be positive".into());
        }
        if self.max_fe < self.pop_size as u64 {
            return bad(format!(
                "max_fe ({}) must cover the initial population ({})",
                self.max_fe, self.pop_size
            ));
        }
        for (name, p) in [
            ("p_switch", self.p_switch),
            ("p_esc", self.p_esc),
            ("p_restart", self.p_restart),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return bad(format!("{name} must lie in [0, 1], got {p}"));
            }
        }
        for (name, theta) in [
            ("theta_max_intens", self.theta_max_intens),
            ("theta_max_explore", self.theta_max_explore),
            ("theta_max_escape", self.theta_max_escape),
        ] {
            if !(theta >= 0.0 && theta < PI / 2.0) {
                return bad(format!("{name} must lie in [0, pi/2), got {theta}"));
            }
        }
        for (name, f) in [
            ("replace_fraction_large", self.replace_fraction_large),
            ("replace_fraction_small", self.replace_fraction_small),
        ] {
            if !(0.0..=1.0).contains(&f) {
                return bad(format!("{name} must lie in [0, 1], got {f}"));
            }
        }
        Ok(())
    }

    /// Number of coordinates copied from the elite for a `dim`-variable problem.
    pub fn replace_count(&self, dim: usize) -> usize {
        let f = if dim <= self.small_dim_threshold {
            self.replace_fraction_small
        } else {
            self.replace_fraction_large
        };
        ((f * dim as f64).round() as usize).clamp(1, dim)
    }
}

/// A signed step magnitude. Angles are drawn separately for each variable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepSample {
    pub sign: f64,
    pub magnitude: f64,
}

/// Intensification step for iteration `t`.
pub fn step1(best: &[f64], dim: usize, t: u64, rng: &mut impl UniformSource) -> StepSample {
    let sign = rng.sign();
    StepSample {
        sign,
        magnitude: step1_magnitude(sign, norm(best), dim, t),
    }
}

/// `10 * sign * max(norm, floor) * ln(1 + 10 dim / t)`.
pub fn step1_magnitude(sign: f64, best_norm: f64, dim: usize, t: u64) -> f64 {
    10.0 * sign * best_norm.max(NORM_FLOOR) * (1.0 + 10.0 * dim as f64 / t as f64).ln()
}

/// Exploration step for iteration `t` and an agent at `position`.
pub fn step2(best: &[f64], position: &[f64], t: u64, rng: &mut impl UniformSource) -> StepSample {
    let sign = rng.sign();
    StepSample {
        sign,
        magnitude: step2_magnitude(sign, distance(best, position), t),
    }
}

/// `sign * max(distance, floor) / ln(20 + t)`.
pub fn step2_magnitude(sign: f64, distance: f64, t: u64) -> f64 {
    sign * distance.max(NORM_FLOOR) / (20.0 + t as f64).ln()
}

/// Escape step `10 * sign / ln(1 + t)`.
pub fn escape_step(sign: f64, t: u64) -> f64 {
    10.0 * sign / (1.0 + t as f64).ln()
}

/// `tan(theta)` for `theta` uniform in `[0, theta_max)`.
pub fn tangent_flight(theta_max: f64, rng: &mut impl UniformSource) -> f64 {
    rng.uniform_in(0.0, theta_max).tan()
}

fn norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt()
}

/// Picks which variables an exploration move mutates.
///
/// Each of `dim` variables is selected independently with probability `1/dim`.
/// Returns the selected indices (ascending) and the count before the
/// force-one rule: when nothing was selected one uniformly random variable is
/// added so that the move always changes the candidate.
pub fn exploration_dims(dim: usize, rng: &mut impl UniformSource) -> (Vec<usize>, usize) {
    let p = 1.0 / dim as f64;
    let mut picked: Vec<usize> = (0..dim).filter(|_| rng.uniform() < p).collect();
    let natural = picked.len();
    if picked.is_empty() {
        picked.push(rng.index(dim));
    }
    (picked, natural)
}

/// `k` distinct indices from `0..dim`, uniformly without replacement.
pub fn choose_distinct(dim: usize, k: usize, rng: &mut impl UniformSource) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..dim).collect();
    for i in 0..k.min(dim) {
        let j = i + rng.index(dim - i);
        idx.swap(i, j);
    }
    idx.truncate(k.min(dim));
    idx
}

/// Best-so-far history of a run.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceTrace {
    /// `(used_fe, best_fitness)` after every evaluation.
    pub records: Vec<(u64, f64)>,
    /// Population mean fitness at the end of initialization and of each iteration.
    pub mean_fitness: Vec<f64>,
}

impl ConvergenceTrace {
    fn push(&mut self, used_fe: u64, fitness: f64) {
        let best = match self.records.last() {
            Some(&(_, b)) if !(fitness < b) => b,
            _ => fitness,
        };
        self.records.push((used_fe, best));
    }

    pub fn final_best(&self) -> Option<f64> {
        self.records.last().map(|&(_, b)| b)
    }

    pub fn is_monotone(&self) -> bool {
        self.records.windows(2).all(|w| !(w[1].1 > w[0].1))
    }

    /// Best value after each multiple of `stride` evaluations, plus the last evaluation.
    pub fn sampled(&self, stride: u64) -> Vec<(u64, f64)> {
        let stride = stride.max(1);
        let mut out: Vec<(u64, f64)> = self
            .records
            .iter()
            .copied()
            .filter(|&(fe, _)| fe % stride == 0)
            .collect();
        if let Some(&last) = self.records.last() {
            if out.last() != Some(&last) {
                out.push(last);
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunSummary {
    pub best_fitness: f64,
    pub best_position: Vec<f64>,
    pub used_fe: u64,
    pub iterations: u64,
    pub seed: u64,
    /// Seconds.
    pub wall_time: f64,
}

/// Mutable state of one run.
#[derive(Debug, Clone)]
pub struct TsaState<R = RngStream> {
    pub population: Vec<SearchAgent>,
    pub best: SearchAgent,
    /// Iteration counter, starting at 1.
    pub iteration: u64,
    pub budget: EvaluationBudget,
    pub rng: R,
    pub noise: RngStream,
}

/// A tangent search run over one problem.
///
/// The stream type is generic so tests can script every draw; production runs
/// use [`RngStream`].
#[derive(Debug)]
pub struct Tsa<'p, R: UniformSource = RngStream> {
    problem: &'p Problem,
    config: TsaConfig,
    state: TsaState<R>,
    trace: ConvergenceTrace,
}

impl<'p> Tsa<'p, RngStream> {
    /// Seeded run: search draws come from `seed`, objective noise from a derived stream.
    pub fn seeded(problem: &'p Problem, config: TsaConfig, seed: u64) -> Result<Self> {
        let rng = RngStream::new(seed);
        let noise = rng.derive(NOISE_STREAM);
        Self::new(problem, config, rng, noise)
    }
}

impl<'p, R: UniformSource> Tsa<'p, R> {
    /// Validates `config` and evaluates a uniformly random initial population.
    pub fn new(problem: &'p Problem, config: TsaConfig, mut rng: R, mut noise: RngStream) -> Result<Self> {
        config.validate()?;
        let mut budget = EvaluationBudget::new(config.max_fe);
        let mut trace = ConvergenceTrace::default();
        let mut population = Vec::with_capacity(config.pop_size);
        for _ in 0..config.pop_size {
            let x = problem.random_solution(&mut rng);
            let f = problem.evaluate(&mut budget, &x, &mut noise)?;
            trace.push(budget.used_fe(), f);
            population.push(SearchAgent::evaluated(x, f));
        }
        let best = population_best(&population).clone();
        trace.mean_fitness.push(mean_fitness(&population));
        Ok(Self {
            problem,
            config,
            state: TsaState {
                population,
                best,
                iteration: 1,
                budget,
                rng,
                noise,
            },
            trace,
        })
    }

    /// Starts from a caller-supplied, already evaluated population.
    ///
    /// No evaluations are charged for the supplied agents.
    pub fn from_population(
        problem: &'p Problem,
        config: TsaConfig,
        population: Vec<SearchAgent>,
        rng: R,
        noise: RngStream,
    ) -> Result<Self> {
        config.validate()?;
        if population.is_empty() {
            return Err(Error::InvalidConfig("population must not be empty".into()));
        }
        for a in &population {
            if a.position.len() != problem.dimension() {
                return Err(Error::DimensionMismatch {
                    expected: problem.dimension(),
                    actual: a.position.len(),
                });
            }
            if !a.fresh {
                return Err(Error::InvalidConfig("population agents must be evaluated".into()));
            }
        }
        let best = population_best(&population).clone();
        let mut trace = ConvergenceTrace::default();
        trace.mean_fitness.push(mean_fitness(&population));
        let budget = EvaluationBudget::new(config.max_fe);
        Ok(Self {
            problem,
            config,
            state: TsaState {
                population,
                best,
                iteration: 1,
                budget,
                rng,
                noise,
            },
            trace,
        })
    }

    pub fn config(&self) -> &TsaConfig {
        &self.config
    }

    pub fn state(&self) -> &TsaState<R> {
        &self.state
    }

    pub fn state_mut(&mut self) -> &mut TsaState<R> {
        &mut self.state
    }

    pub fn trace(&self) -> &ConvergenceTrace {
        &self.trace
    }

    pub fn best(&self) -> &SearchAgent {
        &self.state.best
    }

    pub fn is_exhausted(&self) -> bool {
        self.state.budget.is_exhausted()
    }

    pub fn step1(&mut self) -> StepSample {
        let t = self.state.iteration;
        step1(&self.state.best.position, self.problem.dimension(), t, &mut self.state.rng)
    }

    pub fn step2(&mut self, agent: &SearchAgent) -> StepSample {
        let t = self.state.iteration;
        step2(&self.state.best.position, &agent.position, t, &mut self.state.rng)
    }

    /// Local walk around the elite, then copy a share of the elite's coordinates.
    ///
    /// Draw order: step sign, one angle per variable, the copied subset, repair.
    pub fn intensify(&mut self, agent: &SearchAgent) -> Result<SearchAgent> {
        let dim = self.problem.dimension();
        let step = self.step1();
        let theta_max = self.config.theta_max_intens;
        let best = &self.state.best.position;
        let mut y: Vec<f64> = agent
            .position
            .iter()
            .zip(best)
            .map(|(&x, &b)| x + step.magnitude * tangent_flight(theta_max, &mut self.state.rng) * (x - b))
            .collect();
        let k = self.config.replace_count(dim);
        for i in choose_distinct(dim, k, &mut self.state.rng) {
            y[i] = best[i];
        }
        self.select(agent, y)
    }

    /// Sparse tangent jumps on variables picked with probability `1/D`.
    ///
    /// Draw order: step sign, selection flips (plus the forced index), one angle
    /// per selected variable, repair.
    pub fn explore(&mut self, agent: &SearchAgent) -> Result<SearchAgent> {
        let dim = self.problem.dimension();
        let step = self.step2(agent);
        let (dims, _) = exploration_dims(dim, &mut self.state.rng);
        let mut y = agent.position.clone();
        for i in dims {
            y[i] += step.magnitude * tangent_flight(self.config.theta_max_explore, &mut self.state.rng);
        }
        self.select(agent, y)
    }

    /// Escape procedure.
    ///
    /// Draw order: step sign, restart flip, then either the uniform restart
    /// point or a branch flip followed by per-variable draws for the chosen
    /// move, then repair.
    pub fn escape(&mut self, agent: &SearchAgent) -> Result<SearchAgent> {
        let t = match self.config.escape_clock {
            EscapeClock::Iterations => self.state.iteration,
            EscapeClock::Evaluations => self.state.budget.used_fe().max(1),
        };
        let sign = self.state.rng.sign();
        let rng = &mut self.state.rng;
        let y = if rng.uniform() < 1.0 - self.config.p_restart {
            let r = escape_step(sign, t);
            if rng.uniform() < 0.8 {
                agent
                    .position
                    .iter()
                    .zip(&self.state.best.position)
                    .map(|(&x, &b)| x + r * (b - rng.uniform() * (b - x)))
                    .collect()
            } else {
                let theta_max = self.config.theta_max_escape;
                agent
                    .position
                    .iter()
                    .zip(self.problem.bounds())
                    .map(|(&x, bd)| x + tangent_flight(theta_max, rng) * bd.width())
                    .collect()
            }
        } else {
            self.problem.random_solution(rng)
        };
        self.select(agent, y)
    }

    /// Repairs, evaluates and greedily accepts `candidate` against `parent`.
    fn select(&mut self, parent: &SearchAgent, mut candidate: Vec<f64>) -> Result<SearchAgent> {
        self.problem.repair(&mut candidate, &mut self.state.rng);
        let f = self
            .problem
            .evaluate(&mut self.state.budget, &candidate, &mut self.state.noise)?;
        self.trace.push(self.state.budget.used_fe(), f);
        let child = SearchAgent::evaluated(candidate, f);
        if child.is_better_than(parent) {
            Ok(child)
        } else {
            Ok(parent.clone())
        }
    }

    /// One population sweep plus an optional escape.
    ///
    /// Stops quietly when the budget runs out; whatever was accepted up to that
    /// point is kept and the elite is still refreshed. Returns `false` when no
    /// evaluation was possible.
    pub fn iterate(&mut self) -> bool {
        if self.is_exhausted() {
            return false;
        }
        'sweep: {
            for i in 0..self.state.population.len() {
                if self.is_exhausted() {
                    break 'sweep;
                }
                let agent = self.state.population[i].clone();
                let moved = if self.state.rng.uniform() < self.config.p_switch {
                    self.intensify(&agent)
                } else {
                    self.explore(&agent)
                };
                match moved {
                    Ok(a) => self.state.population[i] = a,
                    Err(_) => break 'sweep,
                }
            }
            if self.is_exhausted() {
                break 'sweep;
            }
            if self.state.rng.uniform() < self.config.p_esc {
                let g = self.state.rng.index(self.state.population.len());
                let agent = self.state.population[g].clone();
                if let Ok(a) = self.escape(&agent) {
                    self.state.population[g] = a;
                }
            }
        }
        let candidate = population_best(&self.state.population);
        if candidate.is_better_than(&self.state.best) {
            self.state.best = candidate.clone();
        }
        self.state.iteration += 1;
        self.trace.mean_fitness.push(mean_fitness(&self.state.population));
        true
    }

    /// Iterates until the budget is spent.
    pub fn run_to_budget(&mut self) {
        while self.iterate() {}
    }

    pub fn into_parts(self) -> (TsaState<R>, ConvergenceTrace) {
        (self.state, self.trace)
    }
}

fn population_best(population: &[SearchAgent]) -> &SearchAgent {
    population
        .iter()
        .reduce(|a, b| if b.is_better_than(a) { b } else { a })
        .expect("population is never empty")
}

fn mean_fitness(population: &[SearchAgent]) -> f64 {
    population.iter().map(|a| a.fitness).sum::<f64>() / population.len() as f64
}

/// Runs the optimizer on `problem` until `config.max_fe` evaluations are used.
///
/// Identical `(problem, config, seed)` inputs give bit-identical outputs.
pub fn run(problem: &Problem, config: &TsaConfig, seed: u64) -> Result<(RunSummary, ConvergenceTrace)> {
    let start = Instant::now();
    let mut tsa = Tsa::seeded(problem, config.clone(), seed)?;
    tsa.run_to_budget();
    let (state, trace) = tsa.into_parts();
    let summary = RunSummary {
        best_fitness: state.best.fitness,
        best_position: state.best.position,
        used_fe: state.budget.used_fe(),
        iterations: state.iteration - 1,
        seed,
        wall_time: start.elapsed().as_secs_f64(),
    };
    Ok((summary, trace))
}
