//! Benchmark corpus: twenty classical functions and five hard ones.
//!
//! Classical ids are `fc01`..`fc20`; the hard suite uses `h01`..`h05`. Functions
//! `fc01`..`fc12`, `h04` and `h05` are scalable and default to 30 variables, the
//! rest have a fixed dimension.

use std::f64::consts::{E, PI};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::problem::{Bounds, Objective, Problem};
use crate::rng::UniformSource;

/// Modality / separability tag: Unimodal or Multimodal, Separable or Non-separable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Modality {
    US,
    UN,
    MS,
    MN,
}

impl fmt::Display for Modality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Modality::US => "US",
            Modality::UN => "UN",
            Modality::MS => "MS",
            Modality::MN => "MN",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Classical,
    Hard,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Kind {
    Sphere,
    Schwefel222,
    Schwefel12,
    Schwefel221,
    Rosenbrock,
    Step,
    Quartic,
    Rastrigin,
    Ackley,
    Griewank,
    Penalized,
    Penalized2,
    Foxholes,
    Kowalik,
    SixHumpCamel,
    Branin,
    GoldsteinPrice,
    Hartman3,
    Hartman6,
    Langermann,
    DeVilliersGlasser02,
    Damavandi,
    CrossLegTable,
    XinSheYang03,
    SineEnvelope,
}

/// Per-pair minimum of the sine-envelope term, as tabulated for the suite.
const SINE_ENVELOPE_PAIR_MIN: f64 = -1.4915;
/// Radius `sqrt(x_i^2 + x_{i+1}^2)` minimizing one sine-envelope pair.
const SINE_ENVELOPE_RADIUS: f64 = 2.066_680_568_128_555;

/// A benchmark function with its published metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct TestFunction {
    id: &'static str,
    name: &'static str,
    kind: Kind,
    suite: Suite,
    default_dimension: usize,
    scalable: bool,
    bounds: Vec<Bounds>,
    modality: Modality,
    optimum: f64,
    optimum_tolerance: f64,
}

impl TestFunction {
    pub fn id(&self) -> &'static str {
        self.id
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn suite(&self) -> Suite {
        self.suite
    }

    pub fn modality(&self) -> Modality {
        self.modality
    }

    pub fn default_dimension(&self) -> usize {
        self.default_dimension
    }

    /// Whether the formula accepts any dimension, not only the default one.
    pub fn is_scalable(&self) -> bool {
        self.scalable
    }

    /// Whether evaluation draws from the noise stream.
    pub fn is_noisy(&self) -> bool {
        self.kind == Kind::Quartic
    }

    /// Bounds at the default dimension.
    pub fn bounds(&self) -> &[Bounds] {
        &self.bounds
    }

    /// Bounds for `dim` variables. Scalable functions repeat their scalar range.
    pub fn bounds_for(&self, dim: usize) -> Result<Vec<Bounds>> {
        self.check_dimension(dim)?;
        if self.scalable {
            Ok(vec![self.bounds[0]; dim])
        } else {
            Ok(self.bounds.clone())
        }
    }

    /// Known optimal value at the default dimension.
    pub fn known_optimum_value(&self) -> f64 {
        self.optimum
    }

    /// Known optimal value for `dim` variables.
    pub fn optimum_for(&self, dim: usize) -> f64 {
        match self.kind {
            Kind::SineEnvelope => SINE_ENVELOPE_PAIR_MIN * (dim as f64 - 1.0),
            _ => self.optimum,
        }
    }

    /// Agreement required between `eval(known_optimizer)` and the known optimum.
    pub fn optimum_tolerance(&self) -> f64 {
        self.optimum_tolerance
    }

    /// A point attaining (or, for tabulated optima, approximating) the known optimum.
    pub fn known_optimizer(&self, dim: usize) -> Option<Vec<f64>> {
        if self.check_dimension(dim).is_err() {
            return None;
        }
        let x = match self.kind {
            Kind::Sphere
            | Kind::Schwefel222
            | Kind::Schwefel12
            | Kind::Schwefel221
            | Kind::Step
            | Kind::Quartic
            | Kind::Rastrigin
            | Kind::Ackley
            | Kind::Griewank
            | Kind::XinSheYang03 => vec![0.0; dim],
            Kind::Rosenbrock | Kind::Penalized2 => vec![1.0; dim],
            Kind::Penalized => vec![-1.0; dim],
            Kind::Foxholes => vec![-31.978_33, -31.978_33],
            Kind::Kowalik => vec![0.192_833, 0.190_836, 0.123_117, 0.135_766],
            Kind::SixHumpCamel => vec![0.089_842_01, -0.712_656_4],
            Kind::Branin => vec![PI, 2.275],
            Kind::GoldsteinPrice => vec![0.0, -1.0],
            Kind::Hartman3 => vec![0.114_614, 0.555_649, 0.852_547],
            Kind::Hartman6 => vec![0.201_69, 0.150_011, 0.476_874, 0.275_332, 0.311_652, 0.657_3],
            Kind::Langermann => vec![4.0; 4],
            Kind::DeVilliersGlasser02 => vec![53.81, 1.27, 3.012, 2.13, 0.507],
            Kind::Damavandi => vec![2.0, 2.0],
            Kind::CrossLegTable => vec![0.0, 0.0],
            Kind::SineEnvelope => vec![SINE_ENVELOPE_RADIUS / 2f64.sqrt(); dim],
        };
        Some(x)
    }

    /// Evaluates the formula at `x`. Only Quartic draws from `noise`.
    pub fn eval(&self, x: &[f64], noise: &mut dyn UniformSource) -> Result<f64> {
        self.check_dimension(x.len())?;
        Ok(self.eval_unchecked(x, noise))
    }

    /// Builds an optimization problem at the default dimension.
    pub fn problem(&self) -> Problem {
        self.problem_with_dimension(self.default_dimension)
            .expect("default dimension is always valid")
    }

    pub fn problem_with_dimension(&self, dim: usize) -> Result<Problem> {
        let bounds = self.bounds_for(dim)?;
        Problem::from_arc(self.id, bounds, Arc::new(self.clone()))
    }

    fn check_dimension(&self, dim: usize) -> Result<()> {
        let ok = if self.scalable {
            // The pairwise sums need at least two variables.
            dim >= self.min_dimension()
        } else {
            dim == self.default_dimension
        };
        if ok {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.default_dimension,
                actual: dim,
            })
        }
    }

    fn min_dimension(&self) -> usize {
        match self.kind {
            Kind::Rosenbrock | Kind::SineEnvelope => 2,
            _ => 1,
        }
    }

    fn eval_unchecked(&self, x: &[f64], noise: &mut dyn UniformSource) -> f64 {
        match self.kind {
            Kind::Sphere => sphere(x),
            Kind::Schwefel222 => schwefel_2_22(x),
            Kind::Schwefel12 => schwefel_1_2(x),
            Kind::Schwefel221 => schwefel_2_21(x),
            Kind::Rosenbrock => rosenbrock(x),
            Kind::Step => step(x),
            Kind::Quartic => quartic(x) + noise.uniform(),
            Kind::Rastrigin => rastrigin(x),
            Kind::Ackley => ackley(x),
            Kind::Griewank => griewank(x),
            Kind::Penalized => penalized(x),
            Kind::Penalized2 => penalized2(x),
            Kind::Foxholes => foxholes(x),
            Kind::Kowalik => kowalik(x),
            Kind::SixHumpCamel => six_hump_camel(x),
            Kind::Branin => branin(x),
            Kind::GoldsteinPrice => goldstein_price(x),
            Kind::Hartman3 => hartman(x, &HARTMAN3_A, &HARTMAN3_P),
            Kind::Hartman6 => hartman(x, &HARTMAN6_A, &HARTMAN6_P),
            Kind::Langermann => langermann(x),
            Kind::DeVilliersGlasser02 => de_villiers_glasser02(x),
            Kind::Damavandi => damavandi(x),
            Kind::CrossLegTable => cross_leg_table(x),
            Kind::XinSheYang03 => xin_she_yang03(x),
            Kind::SineEnvelope => sine_envelope(x),
        }
    }
}

impl Objective for TestFunction {
    fn value(&self, x: &[f64], noise: &mut dyn UniformSource) -> f64 {
        self.eval_unchecked(x, noise)
    }
}

struct Entry {
    id: &'static str,
    name: &'static str,
    kind: Kind,
    dim: usize,
    scalable: bool,
    range: &'static [(f64, f64)],
    modality: Modality,
    optimum: f64,
    tol: f64,
}

const CLASSICAL: &[Entry] = &[
    Entry { id: "fc01", name: "Sphere", kind: Kind::Sphere, dim: 30, scalable: true, range: &[(-100.0, 100.0)], modality: Modality::US, optimum: 0.0, tol: 1e-6 },
    Entry { id: "fc02", name: "Schwefel 2.22", kind: Kind::Schwefel222, dim: 30, scalable: true, range: &[(-10.0, 10.0)], modality: Modality::UN, optimum: 0.0, tol: 1e-6 },
    Entry { id: "fc03", name: "Schwefel 1.2", kind: Kind::Schwefel12, dim: 30, scalable: true, range: &[(-100.0, 100.0)], modality: Modality::UN, optimum: 0.0, tol: 1e-6 },
    Entry { id: "fc04", name: "Schwefel 2.21", kind: Kind::Schwefel221, dim: 30, scalable: true, range: &[(-100.0, 100.0)], modality: Modality::US, optimum: 0.0, tol: 1e-6 },
    Entry { id: "fc05", name: "Rosenbrock", kind: Kind::Rosenbrock, dim: 30, scalable: true, range: &[(-30.0, 30.0)], modality: Modality::UN, optimum: 0.0, tol: 1e-6 },
    Entry { id: "fc06", name: "Step", kind: Kind::Step, dim: 30, scalable: true, range: &[(-100.0, 100.0)], modality: Modality::US, optimum: 0.0, tol: 1e-6 },
    Entry { id: "fc07", name: "Quartic", kind: Kind::Quartic, dim: 30, scalable: true, range: &[(-1.28, 1.28)], modality: Modality::US, optimum: 0.0, tol: 1e-6 },
    Entry { id: "fc08", name: "Rastrigin", kind: Kind::Rastrigin, dim: 30, scalable: true, range: &[(-5.12, 5.12)], modality: Modality::MS, optimum: 0.0, tol: 1e-6 },
    Entry { id: "fc09", name: "Ackley", kind: Kind::Ackley, dim: 30, scalable: true, range: &[(-32.0, 32.0)], modality: Modality::MS, optimum: 0.0, tol: 1e-6 },
    Entry { id: "fc10", name: "Griewank", kind: Kind::Griewank, dim: 30, scalable: true, range: &[(-600.0, 600.0)], modality: Modality::MN, optimum: 0.0, tol: 1e-6 },
    Entry { id: "fc11", name: "Penalized", kind: Kind::Penalized, dim: 30, scalable: true, range: &[(-50.0, 50.0)], modality: Modality::MN, optimum: 0.0, tol: 1e-6 },
    Entry { id: "fc12", name: "Penalized2", kind: Kind::Penalized2, dim: 30, scalable: true, range: &[(-50.0, 50.0)], modality: Modality::MN, optimum: 0.0, tol: 1e-6 },
    Entry { id: "fc13", name: "Foxholes", kind: Kind::Foxholes, dim: 2, scalable: false, range: &[(-65.53, 65.53), (-65.53, 65.53)], modality: Modality::MS, optimum: 0.998004, tol: 1e-3 },
    Entry { id: "fc14", name: "Kowalik", kind: Kind::Kowalik, dim: 4, scalable: false, range: &[(-5.0, 5.0); 4], modality: Modality::MS, optimum: 0.0003075, tol: 1e-6 },
    Entry { id: "fc15", name: "Six Hump Camel Back", kind: Kind::SixHumpCamel, dim: 2, scalable: false, range: &[(-5.0, 5.0); 2], modality: Modality::MN, optimum: -1.03163, tol: 1e-4 },
    Entry { id: "fc16", name: "Branin", kind: Kind::Branin, dim: 2, scalable: false, range: &[(-5.0, 10.0), (0.0, 15.0)], modality: Modality::MS, optimum: 0.398, tol: 1e-3 },
    Entry { id: "fc17", name: "Goldstein Price", kind: Kind::GoldsteinPrice, dim: 2, scalable: false, range: &[(-5.0, 5.0); 2], modality: Modality::MN, optimum: 3.0, tol: 1e-6 },
    Entry { id: "fc18", name: "Hartman 3", kind: Kind::Hartman3, dim: 3, scalable: false, range: &[(0.0, 1.0); 3], modality: Modality::MN, optimum: -3.8628, tol: 1e-3 },
    Entry { id: "fc19", name: "Hartman 6", kind: Kind::Hartman6, dim: 6, scalable: false, range: &[(0.0, 1.0); 6], modality: Modality::MN, optimum: -3.3220, tol: 1e-3 },
    Entry { id: "fc20", name: "Langermann", kind: Kind::Langermann, dim: 4, scalable: false, range: &[(0.0, 10.0); 4], modality: Modality::MN, optimum: -10.1532, tol: 1e-3 },
];

const HARD: &[Entry] = &[
    Entry { id: "h01", name: "DeVilliersGlasser02", kind: Kind::DeVilliersGlasser02, dim: 5, scalable: false, range: &[(0.0, 60.0); 5], modality: Modality::MN, optimum: 0.0, tol: 1e-6 },
    Entry { id: "h02", name: "Damavandi", kind: Kind::Damavandi, dim: 2, scalable: false, range: &[(0.0, 14.0); 2], modality: Modality::MN, optimum: 0.0, tol: 1e-6 },
    Entry { id: "h03", name: "CrossLegTable", kind: Kind::CrossLegTable, dim: 2, scalable: false, range: &[(-10.0, 10.0); 2], modality: Modality::MN, optimum: -1.0, tol: 1e-6 },
    Entry { id: "h04", name: "XinSheYang03", kind: Kind::XinSheYang03, dim: 30, scalable: true, range: &[(-20.0, 20.0)], modality: Modality::MN, optimum: -1.0, tol: 1e-6 },
    Entry { id: "h05", name: "SineEnvelope", kind: Kind::SineEnvelope, dim: 30, scalable: true, range: &[(-100.0, 100.0)], modality: Modality::MN, optimum: -43.2535, tol: 1e-3 },
];

fn build(entries: &[Entry], suite: Suite) -> Vec<TestFunction> {
    entries
        .iter()
        .map(|e| {
            let bounds = if e.scalable {
                let (lb, ub) = e.range[0];
                vec![Bounds { lb, ub }; e.dim]
            } else {
                e.range.iter().map(|&(lb, ub)| Bounds { lb, ub }).collect()
            };
            TestFunction {
                id: e.id,
                name: e.name,
                kind: e.kind,
                suite,
                default_dimension: e.dim,
                scalable: e.scalable,
                bounds,
                modality: e.modality,
                optimum: e.optimum,
                optimum_tolerance: e.tol,
            }
        })
        .collect()
}

/// `fc01`..`fc20`: twelve scalable functions at D = 30 followed by eight fixed-dimension ones.
pub fn classical_suite() -> Vec<TestFunction> {
    build(CLASSICAL, Suite::Classical)
}

/// `h01`..`h05`.
pub fn hard_suite() -> Vec<TestFunction> {
    build(HARD, Suite::Hard)
}

/// Every registered function, classical first.
pub fn all_functions() -> Vec<TestFunction> {
    let mut v = classical_suite();
    v.extend(hard_suite());
    v
}

/// Looks a function up by id (`fc08`) or case-insensitive name (`rastrigin`).
pub fn by_id(id: &str) -> Result<TestFunction> {
    all_functions()
        .into_iter()
        .find(|f| f.id == id || f.name.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::UnknownFunction(id.to_string()))
}

/// Evaluates `f` at `x`; see [`TestFunction::eval`].
pub fn eval_function(f: &TestFunction, x: &[f64], noise: &mut dyn UniformSource) -> Result<f64> {
    f.eval(x, noise)
}

// ---------------------------------------------------------------------------
// Formulas

pub fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

pub fn schwefel_2_22(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v.abs()).sum();
    let prod: f64 = x.iter().map(|v| v.abs()).product();
    sum + prod
}

pub fn schwefel_1_2(x: &[f64]) -> f64 {
    let mut partial = 0.0;
    let mut total = 0.0;
    for v in x {
        partial += v;
        total += partial * partial;
    }
    total
}

pub fn schwefel_2_21(x: &[f64]) -> f64 {
    x.iter().fold(0.0, |m, v| m.max(v.abs()))
}

pub fn rosenbrock(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2))
        .sum()
}

pub fn step(x: &[f64]) -> f64 {
    x.iter().map(|v| (v + 0.5).floor().powi(2)).sum()
}

/// Noise-free part of Quartic, `sum(i * x_i^4)` with 1-based `i`.
pub fn quartic(x: &[f64]) -> f64 {
    x.iter()
        .enumerate()
        .map(|(i, v)| (i + 1) as f64 * v.powi(4))
        .sum()
}

pub fn rastrigin(x: &[f64]) -> f64 {
    x.iter()
        .map(|v| v * v - 10.0 * (2.0 * PI * v).cos() + 10.0)
        .sum()
}

pub fn ackley(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sq = x.iter().map(|v| v * v).sum::<f64>() / n;
    let cs = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / n;
    20.0 + E - 20.0 * (-0.2 * sq.sqrt()).exp() - cs.exp()
}

pub fn griewank(x: &[f64]) -> f64 {
    let sum = x.iter().map(|v| v * v).sum::<f64>() / 4000.0;
    let prod: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
        .product();
    sum - prod + 1.0
}

/// Boundary penalty `u(x, a, k, m)`: zero on `[-a, a]`, `k (|x| - a)^m` outside.
pub fn penalty(x: f64, a: f64, k: f64, m: i32) -> f64 {
    if x > a {
        k * (x - a).powi(m)
    } else if x < -a {
        k * (-x - a).powi(m)
    } else {
        0.0
    }
}

pub fn penalized(x: &[f64]) -> f64 {
    let n = x.len();
    let y: Vec<f64> = x.iter().map(|v| 1.0 + (v + 1.0) / 4.0).collect();
    let mut s = 10.0 * (PI * y[0]).sin().powi(2);
    for i in 0..n - 1 {
        s += (y[i] - 1.0).powi(2) * (1.0 + 10.0 * (PI * y[i + 1]).sin().powi(2));
    }
    s += (y[n - 1] - 1.0).powi(2);
    let pen: f64 = x.iter().map(|&v| penalty(v, 10.0, 100.0, 4)).sum();
    PI / n as f64 * s + pen
}

pub fn penalized2(x: &[f64]) -> f64 {
    let n = x.len();
    let mut s = (3.0 * PI * x[0]).sin().powi(2);
    for i in 0..n - 1 {
        s += (x[i] - 1.0).powi(2) * (1.0 + (3.0 * PI * x[i + 1]).sin().powi(2));
    }
    s += (x[n - 1] - 1.0).powi(2) * (1.0 + (2.0 * PI * x[n - 1]).sin().powi(2));
    let pen: f64 = x.iter().map(|&v| penalty(v, 5.0, 100.0, 4)).sum();
    0.1 * s + pen
}

const FOXHOLE_GRID: [f64; 5] = [-32.0, -16.0, 0.0, 16.0, 32.0];

pub fn foxholes(x: &[f64]) -> f64 {
    let mut s = 1.0 / 500.0;
    for j in 0..25 {
        let a1 = FOXHOLE_GRID[j % 5];
        let a2 = FOXHOLE_GRID[j / 5];
        let d = (x[0] - a1).powi(6) + (x[1] - a2).powi(6);
        s += 1.0 / ((j + 1) as f64 + d);
    }
    1.0 / s
}

const KOWALIK_A: [f64; 11] = [
    0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246,
];
const KOWALIK_INV_B: [f64; 11] = [0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0];

pub fn kowalik(x: &[f64]) -> f64 {
    KOWALIK_A
        .iter()
        .zip(KOWALIK_INV_B)
        .map(|(&a, inv_b)| {
            let b = 1.0 / inv_b;
            let model = x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
            (a - model).powi(2)
        })
        .sum()
}

pub fn six_hump_camel(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    4.0 * a * a - 2.1 * a.powi(4) + a.powi(6) / 3.0 + a * b - 4.0 * b * b + 4.0 * b.powi(4)
}

pub fn branin(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    (b - 5.1 / (4.0 * PI * PI) * a * a + 5.0 / PI * a - 6.0).powi(2)
        + 10.0 * (1.0 - 1.0 / (8.0 * PI)) * a.cos()
        + 10.0
}

pub fn goldstein_price(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    let t1 = 1.0
        + (a + b + 1.0).powi(2)
            * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
    let t2 = 30.0
        + (2.0 * a - 3.0 * b).powi(2)
            * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b);
    t1 * t2
}

const HARTMAN_C: [f64; 4] = [1.0, 1.2, 3.0, 3.2];
const HARTMAN3_A: [[f64; 3]; 4] = [
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
];
const HARTMAN3_P: [[f64; 3]; 4] = [
    [0.3689, 0.1170, 0.2673],
    [0.4699, 0.4387, 0.7470],
    [0.1091, 0.8732, 0.5547],
    [0.038150, 0.5743, 0.8828],
];
const HARTMAN6_A: [[f64; 6]; 4] = [
    [10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
    [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
    [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
    [17.0, 8.0, 0.05, 10.0, 0.1, 14.0],
];
const HARTMAN6_P: [[f64; 6]; 4] = [
    [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886],
    [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
    [0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650],
    [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
];

fn hartman<const N: usize>(x: &[f64], a: &[[f64; N]; 4], p: &[[f64; N]; 4]) -> f64 {
    -(0..4)
        .map(|i| {
            let inner: f64 = (0..N).map(|j| a[i][j] * (x[j] - p[i][j]).powi(2)).sum();
            HARTMAN_C[i] * (-inner).exp()
        })
        .sum::<f64>()
}

const LANGERMANN_A: [[f64; 4]; 5] = [
    [4.0, 4.0, 4.0, 4.0],
    [1.0, 1.0, 1.0, 1.0],
    [8.0, 8.0, 8.0, 8.0],
    [6.0, 6.0, 6.0, 6.0],
    [3.0, 7.0, 3.0, 7.0],
];
const LANGERMANN_C: [f64; 5] = [0.1, 0.2, 0.2, 0.4, 0.4];

/// `-sum_i 1 / ((x - a_i)(x - a_i)^T + c_i)` over five 4-d centres.
pub fn langermann(x: &[f64]) -> f64 {
    -LANGERMANN_A
        .iter()
        .zip(LANGERMANN_C)
        .map(|(a, c)| {
            let d: f64 = x.iter().zip(a).map(|(v, ai)| (v - ai).powi(2)).sum();
            1.0 / (d + c)
        })
        .sum::<f64>()
}

pub fn de_villiers_glasser02(x: &[f64]) -> f64 {
    (0..24)
        .map(|i| {
            let t = 0.1 * i as f64;
            let y = 53.81 * 1.27f64.powf(t) * (3.012 * t + (2.13 * t).sin()).tanh()
                * (0.507f64.exp() * t).cos();
            let model = x[0] * x[1].powf(t) * (x[2] * t + (x[3] * t).sin()).tanh()
                * (t * x[4].exp()).cos();
            (model - y).powi(2)
        })
        .sum()
}

/// `sin(pi z) / (pi z)` with the removable singularity at `z = 0` filled in.
fn sinc_pi(z: f64) -> f64 {
    if z.abs() < 1e-12 {
        1.0
    } else {
        (PI * z).sin() / (PI * z)
    }
}

pub fn damavandi(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    let ratio = (sinc_pi(a - 2.0) * sinc_pi(b - 2.0)).abs();
    (1.0 - ratio.powi(5)) * (2.0 + (a - 7.0).powi(2) + 2.0 * (b - 7.0).powi(2))
}

pub fn cross_leg_table(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    let r = (a * a + b * b).sqrt();
    let inner = (a.sin() * b.sin() * (100.0 - r / PI).abs().exp()).abs() + 1.0;
    -inner.powf(-0.1)
}

pub fn xin_she_yang03(x: &[f64]) -> f64 {
    const BETA: f64 = 15.0;
    const M: i32 = 3;
    let a: f64 = x.iter().map(|v| (v / BETA).powi(2 * M)).sum();
    let b: f64 = x.iter().map(|v| v * v).sum();
    let c: f64 = x.iter().map(|v| v.cos().powi(2)).product();
    (-a).exp() - 2.0 * (-b).exp() * c
}

pub fn sine_envelope(x: &[f64]) -> f64 {
    -x.windows(2)
        .map(|w| {
            let r2 = w[0] * w[0] + w[1] * w[1];
            (r2.sqrt() - 0.5).sin().powi(2) / (0.001 * r2 + 1.0).powi(2) + 0.5
        })
        .sum::<f64>()
}
