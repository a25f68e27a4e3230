//! Tangent-flight samples for plotting.

use std::f64::consts::PI;
use std::path::Path;
use std::str::FromStr;

use tsa_core::rng::{RngStream, UniformSource};
use tsa_core::tsa::tangent_flight;

use crate::error::{BenchError, Result};
use crate::results::csv_error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScatterMode {
    /// `tan(theta)`, theta uniform in `[0, theta_max)`.
    RawTangent,
    /// `sign * ln(1 + 10 D / t) * tan(theta)` along `t = 1..=samples`.
    Decayed,
}

impl FromStr for ScatterMode {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "raw_tangent" => Ok(ScatterMode::RawTangent),
            "decayed" => Ok(ScatterMode::Decayed),
            _ => Err(BenchError::Config(format!(
                "unknown scatter mode `{s}` (expected raw_tangent or decayed)"
            ))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ScatterParams {
    pub mode: ScatterMode,
    pub samples: usize,
    pub seed: u64,
    pub theta_max: f64,
    /// Dimension in the decay factor.
    pub dim: usize,
}

impl Default for ScatterParams {
    fn default() -> Self {
        Self {
            mode: ScatterMode::RawTangent,
            samples: 10_000,
            seed: 0,
            theta_max: PI / 2.1,
            dim: 30,
        }
    }
}

pub fn scatter(params: &ScatterParams) -> Result<Vec<(usize, f64)>> {
    if params.samples == 0 {
        return Err(BenchError::Config("samples must be at least 1".into()));
    }
    if !(params.theta_max > 0.0 && params.theta_max < PI / 2.0) {
        return Err(BenchError::Config(format!(
            "theta_max must lie in (0, pi/2), got {}",
            params.theta_max
        )));
    }
    if params.dim == 0 {
        return Err(BenchError::Config("dim must be at least 1".into()));
    }
    let mut rng = RngStream::new(params.seed);
    let points = (0..params.samples)
        .map(|i| {
            let v = match params.mode {
                ScatterMode::RawTangent => tangent_flight(params.theta_max, &mut rng),
                ScatterMode::Decayed => {
                    let sign = rng.sign();
                    let t = (i + 1) as f64;
                    sign * (1.0 + 10.0 * params.dim as f64 / t).ln() * tangent_flight(params.theta_max, &mut rng)
                }
            };
            (i, v)
        })
        .collect();
    Ok(points)
}

pub fn write_scatter(path: &Path, points: &[(usize, f64)]) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(|e| csv_error(path, e))?;
    w.write_record(["index", "value"]).map_err(|e| csv_error(path, e))?;
    for p in points {
        w.serialize(p).map_err(|e| csv_error(path, e))?;
    }
    w.flush().map_err(|e| BenchError::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quarter_pi_stays_in_unit_interval() {
        let params = ScatterParams { theta_max: PI / 4.0, seed: 3, ..Default::default() };
        assert!(scatter(&params).unwrap().iter().all(|p| (0.0..=1.0).contains(&p.1)));
    }

    #[test]
    fn decay_shrinks_late_values() {
        let params = ScatterParams { mode: ScatterMode::Decayed, ..Default::default() };
        let pts = scatter(&params).unwrap();
        let decile = pts.len() / 10;
        let peak = |s: &[(usize, f64)]| s.iter().map(|p| p.1.abs()).fold(0.0, f64::max);
        assert!(peak(&pts[pts.len() - decile..]) < peak(&pts[..decile]));
        assert!(pts.iter().any(|p| p.1 < 0.0));
    }

    #[test]
    fn invalid_params() {
        assert!(scatter(&ScatterParams { samples: 0, ..Default::default() }).is_err());
        assert!(scatter(&ScatterParams { theta_max: 2.0, ..Default::default() }).is_err());
        assert!("sideways".parse::<ScatterMode>().is_err());
    }
}
