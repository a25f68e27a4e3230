//! Box-bounded minimization problems and evaluation-budget accounting.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::UniformSource;

/// Closed interval `[lb, ub]` for one decision variable.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bounds {
    pub lb: f64,
    pub ub: f64,
}

impl Bounds {
    pub fn new(lb: f64, ub: f64) -> Result<Self> {
        if !(lb < ub) || !lb.is_finite() || !ub.is_finite() {
            return Err(Error::InvalidBounds { lb, ub });
        }
        Ok(Self { lb, ub })
    }

    pub fn width(&self) -> f64 {
        self.ub - self.lb
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lb <= x && x <= self.ub
    }

    /// `lb + width * u` for a uniform draw `u`.
    pub fn sample(&self, rng: &mut impl UniformSource) -> f64 {
        self.lb + self.width() * rng.uniform()
    }
}

/// An objective to be minimized.
///
/// `noise` is a caller-owned stream for objectives with a stochastic term; it is
/// kept separate from the optimizer's own stream so that noisy runs stay
/// reproducible from a seed.
pub trait Objective: Send + Sync {
    fn value(&self, x: &[f64], noise: &mut dyn UniformSource) -> f64;
}

impl<F> Objective for F
where
    F: Fn(&[f64]) -> f64 + Send + Sync,
{
    fn value(&self, x: &[f64], _noise: &mut dyn UniformSource) -> f64 {
        self(x)
    }
}

/// A named objective over a per-dimension box.
#[derive(Clone)]
pub struct Problem {
    name: String,
    bounds: Vec<Bounds>,
    objective: Arc<dyn Objective>,
}

impl fmt::Debug for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Problem")
            .field("name", &self.name)
            .field("bounds", &self.bounds)
            .finish_non_exhaustive()
    }
}

impl Problem {
    pub fn new(
        name: impl Into<String>,
        bounds: Vec<Bounds>,
        objective: impl Objective + 'static,
    ) -> Result<Self> {
        Self::from_arc(name, bounds, Arc::new(objective))
    }

    pub fn from_arc(
        name: impl Into<String>,
        bounds: Vec<Bounds>,
        objective: Arc<dyn Objective>,
    ) -> Result<Self> {
        if bounds.is_empty() {
            return Err(Error::InvalidConfig(
                "a problem needs at least one dimension".into(),
            ));
        }
        for b in &bounds {
            Bounds::new(b.lb, b.ub)?;
        }
        Ok(Self {
            name: name.into(),
            bounds,
            objective,
        })
    }

    /// Same scalar range on every one of `dimension` variables.
    pub fn uniform_box(
        name: impl Into<String>,
        dimension: usize,
        lb: f64,
        ub: f64,
        objective: impl Objective + 'static,
    ) -> Result<Self> {
        let b = Bounds::new(lb, ub)?;
        Self::new(name, vec![b; dimension], objective)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dimension(&self) -> usize {
        self.bounds.len()
    }

    pub fn bounds(&self) -> &[Bounds] {
        &self.bounds
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dimension() && self.bounds.iter().zip(x).all(|(b, &v)| b.contains(v))
    }

    /// Evaluates the objective without touching any budget.
    pub fn value(&self, x: &[f64], noise: &mut dyn UniformSource) -> Result<f64> {
        self.check_dimension(x)?;
        Ok(self.objective.value(x, noise))
    }

    /// Evaluates `x`, charging one function evaluation to `budget`.
    pub fn evaluate(
        &self,
        budget: &mut EvaluationBudget,
        x: &[f64],
        noise: &mut dyn UniformSource,
    ) -> Result<f64> {
        self.check_dimension(x)?;
        budget.charge()?;
        Ok(self.objective.value(x, noise))
    }

    /// Uniform point in the box: `lb_i + (ub_i - lb_i) * u_i`, one draw per coordinate.
    pub fn random_solution(&self, rng: &mut impl UniformSource) -> Vec<f64> {
        self.bounds.iter().map(|b| b.sample(rng)).collect()
    }

    /// Replaces every out-of-range coordinate with a fresh uniform value inside
    /// its range. In-range coordinates are left untouched and consume no draws.
    pub fn repair(&self, x: &mut [f64], rng: &mut impl UniformSource) {
        debug_assert_eq!(x.len(), self.dimension());
        for (v, b) in x.iter_mut().zip(&self.bounds) {
            // NaN compares false both ways; treat it as a violation too.
            if !(b.lb <= *v && *v <= b.ub) {
                *v = b.sample(rng);
            }
        }
    }

    fn check_dimension(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                actual: x.len(),
            });
        }
        Ok(())
    }
}

/// Counts function evaluations against a fixed maximum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvaluationBudget {
    max_fe: u64,
    used_fe: u64,
}

impl EvaluationBudget {
    pub fn new(max_fe: u64) -> Self {
        Self { max_fe, used_fe: 0 }
    }

    pub fn max_fe(&self) -> u64 {
        self.max_fe
    }

    pub fn used_fe(&self) -> u64 {
        self.used_fe
    }

    pub fn remaining(&self) -> u64 {
        self.max_fe - self.used_fe
    }

    pub fn is_exhausted(&self) -> bool {
        self.used_fe >= self.max_fe
    }

    fn charge(&mut self) -> Result<()> {
        if self.is_exhausted() {
            return Err(Error::BudgetExhausted {
                max_fe: self.max_fe,
            });
        }
        self.used_fe += 1;
        Ok(())
    }
}

/// A candidate position with its cached objective value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchAgent {
    pub position: Vec<f64>,
    pub fitness: f64,
    /// Whether `fitness` was computed at the current `position`.
    pub fresh: bool,
}

impl SearchAgent {
    pub fn evaluated(position: Vec<f64>, fitness: f64) -> Self {
        Self {
            position,
            fitness,
            fresh: true,
        }
    }

    pub fn unevaluated(position: Vec<f64>) -> Self {
        Self {
            position,
            fitness: f64::INFINITY,
            fresh: false,
        }
    }

    /// Strict improvement, with NaN never counting as better.
    pub fn is_better_than(&self, other: &SearchAgent) -> bool {
        self.fitness < other.fitness
    }
}
