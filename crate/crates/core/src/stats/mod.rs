//! Nonparametric comparison of result samples.
//!
//! Paired comparisons use the Wilcoxon signed-rank test, multi-sample ones the
//! Kruskal-Wallis test. Both report a two-sided decision at level `alpha` and a
//! direction saying which side ranks better (lower is better).

mod kruskal;
pub mod special;
mod wilcoxon;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use kruskal::kruskal_wallis;
pub use wilcoxon::{signed_rank_null_counts, wilcoxon_signed_rank};

/// Default significance level.
pub const ALPHA: f64 = 0.05;

/// Labelled sample, one value per run or per problem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleSet {
    pub label: String,
    pub values: Vec<f64>,
}

impl SampleSet {
    pub fn new(label: impl Into<String>, values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::DegenerateInput("sample is empty".into()));
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::DegenerateInput(format!("non-finite value {v} in sample")));
        }
        Ok(Self {
            label: label.into(),
            values,
        })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Which side of a comparison ranks better.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    /// The first / reference sample is significantly better.
    #[serde(rename = "+")]
    Better,
    /// The first / reference sample is significantly worse.
    #[serde(rename = "-")]
    Worse,
    /// No significant difference.
    #[serde(rename = "=")]
    Tie,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Better => "+",
            Direction::Worse => "-",
            Direction::Tie => "=",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatTestResult {
    pub statistic: f64,
    pub p_value: f64,
    pub reject: bool,
    pub alpha: f64,
    pub direction: Direction,
    /// Mean rank of each sample, in input order (empty for paired tests).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub mean_ranks: Vec<f64>,
}

impl StatTestResult {
    /// Result for inputs that carry no evidence at all.
    pub fn no_evidence(alpha: f64) -> Self {
        Self {
            statistic: 0.0,
            p_value: 1.0,
            reject: false,
            alpha,
            direction: Direction::Tie,
            mean_ranks: Vec::new(),
        }
    }
}

/// Mid-ranks (1-based) of `values`, plus the sizes of every tie group.
pub fn midranks(values: &[f64]) -> (Vec<f64>, Vec<usize>) {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut ties = Vec::new();
    let mut i = 0;
    while i < order.len() {
        let mut j = i + 1;
        while j < order.len() && values[order[j]] == values[order[i]] {
            j += 1;
        }
        // positions i..j share the average of ranks i+1..=j
        let rank = (i + 1 + j) as f64 / 2.0;
        for &k in &order[i..j] {
            ranks[k] = rank;
        }
        if j - i > 1 {
            ties.push(j - i);
        }
        i = j;
    }
    (ranks, ties)
}

/// Scales each row of a problems-by-algorithms matrix to `[0, 1]`.
///
/// Constant rows map to all zeros.
pub fn normalize_scores(rows: &[Vec<f64>]) -> Vec<Vec<f64>> {
    rows.iter()
        .map(|row| {
            let min = row.iter().copied().fold(f64::INFINITY, f64::min);
            let max = row.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let span = max - min;
            if !(span > 0.0) || !span.is_finite() {
                return vec![0.0; row.len()];
            }
            row.iter().map(|&v| ((v - min) / span).clamp(0.0, 1.0)).collect()
        })
        .collect()
}

/// Mean, sample standard deviation and minimum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub mean: f64,
    pub std: f64,
    pub best: f64,
}

/// `(n - 1)`-denominator standard deviation; a single value has `std = 0`.
pub fn summarize(sample: &SampleSet) -> Summary {
    let v = &sample.values;
    let n = v.len() as f64;
    let mean = v.iter().sum::<f64>() / n;
    let std = if v.len() < 2 {
        0.0
    } else {
        (v.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
    };
    let best = v.iter().copied().fold(f64::INFINITY, f64::min);
    Summary { mean, std, best }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn midrank_ties() {
        let (r, t) = midranks(&[10.0, 20.0, 20.0, 5.0]);
        assert_eq!(r, vec![2.0, 3.5, 3.5, 1.0]);
        assert_eq!(t, vec![2]);
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_scores(&[vec![10.0, 20.0, 30.0]]), vec![vec![0.0, 0.5, 1.0]]);
        assert_eq!(normalize_scores(&[vec![5.0, 5.0, 5.0]]), vec![vec![0.0, 0.0, 0.0]]);
        let r = &normalize_scores(&[vec![0.0, 1e-300, 1.0]])[0];
        assert_eq!(r[0], 0.0);
        assert!(r[1] >= 0.0 && r[1] < 1e-299);
        assert_eq!(r[2], 1.0);
    }

    #[test]
    fn summarize_examples() {
        let s = summarize(&SampleSet::new("a", vec![1.0, 2.0, 3.0]).unwrap());
        assert_eq!(s, Summary { mean: 2.0, std: 1.0, best: 1.0 });
        let s = summarize(&SampleSet::new("a", vec![7.0]).unwrap());
        assert_eq!(s, Summary { mean: 7.0, std: 0.0, best: 7.0 });
        let s = summarize(&SampleSet::new("a", vec![0.0; 30]).unwrap());
        assert_eq!(s, Summary { mean: 0.0, std: 0.0, best: 0.0 });
    }

    #[test]
    fn sample_validation() {
        assert!(SampleSet::new("a", vec![]).is_err());
        assert!(SampleSet::new("a", vec![1.0, f64::NAN]).is_err());
    }

    proptest! {
        #[test]
        fn normalized_rows_stay_in_unit_interval(
            row in proptest::collection::vec(-1e12f64..1e12, 1..12)
        ) {
            let out = &normalize_scores(std::slice::from_ref(&row))[0];
            prop_assert!(out.iter().all(|v| (0.0..=1.0).contains(v)));
            let argmin = |v: &[f64]| v.iter().enumerate().min_by(|a, b| a.1.total_cmp(b.1)).unwrap().0;
            let argmax = |v: &[f64]| v.iter().enumerate().max_by(|a, b| a.1.total_cmp(b.1)).unwrap().0;
            let min = row.iter().copied().fold(f64::INFINITY, f64::min);
            let max = row.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            if max > min {
                prop_assert_eq!(out[argmin(&row)], 0.0);
                prop_assert_eq!(out[argmax(&row)], 1.0);
            }
        }
    }
}
