//! Cross-algorithm comparison of result files.
//!
//! Each file contributes one value per function (the mean best fitness over
//! its runs). Values are normalized per function, the first file is compared
//! pairwise against every other with the signed-rank test, and all files
//! together go through Kruskal-Wallis on the normalized scores.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use tsa_core::stats::{
    kruskal_wallis, normalize_scores, wilcoxon_signed_rank, Direction, SampleSet, StatTestResult,
};

use crate::error::{BenchError, Result};
use crate::results::ResultsFile;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairwiseRow {
    pub reference: String,
    pub other: String,
    /// `P` column.
    pub p_value: f64,
    /// `H` column: 1 when the null is rejected.
    pub h: u8,
    /// `Ranks` column: `+`, `-` or `=` from the reference's point of view.
    pub direction: Direction,
    pub statistic: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub alpha: f64,
    pub labels: Vec<String>,
    pub functions: Vec<String>,
    /// Mean best fitness, functions by files.
    pub means: Vec<Vec<f64>>,
    /// Row-normalized `means`.
    pub normalized: Vec<Vec<f64>>,
    pub wilcoxon: Vec<PairwiseRow>,
    pub kruskal_wallis: StatTestResult,
}

/// Labels each file by its path.
pub fn load_all(paths: &[PathBuf]) -> Result<Vec<(String, ResultsFile)>> {
    paths
        .iter()
        .map(|p| Ok((p.display().to_string(), ResultsFile::load(p)?)))
        .collect()
}

pub fn compare(sets: &[(String, ResultsFile)], alpha: f64) -> Result<Comparison> {
    if sets.len() < 2 {
        return Err(BenchError::Config(format!(
            "compare needs at least two result files, got {}",
            sets.len()
        )));
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(BenchError::Config(format!("alpha must lie in (0, 1), got {alpha}")));
    }
    let (ref_label, reference) = &sets[0];
    let ref_ids: BTreeSet<&str> = reference.function_ids().into_iter().collect();
    for (label, other) in &sets[1..] {
        let ids: BTreeSet<&str> = other.function_ids().into_iter().collect();
        if ids != ref_ids {
            return Err(BenchError::MismatchedFunctions {
                left: ref_label.clone(),
                right: label.clone(),
                only_left: ref_ids.difference(&ids).map(|s| s.to_string()).collect(),
                only_right: ids.difference(&ref_ids).map(|s| s.to_string()).collect(),
            });
        }
    }

    let functions: Vec<String> = reference.function_ids().iter().map(|s| s.to_string()).collect();
    let means: Vec<Vec<f64>> = functions
        .iter()
        .map(|id| {
            sets.iter()
                .map(|(_, r)| r.function(id).expect("checked above").summary.mean)
                .collect()
        })
        .collect();
    let normalized = normalize_scores(&means);

    let column = |j: usize, m: &[Vec<f64>]| -> Result<SampleSet> {
        Ok(SampleSet::new(sets[j].0.clone(), m.iter().map(|row| row[j]).collect())?)
    };
    let mut wilcoxon = Vec::new();
    let a = column(0, &means)?;
    for j in 1..sets.len() {
        let b = column(j, &means)?;
        let r = wilcoxon_signed_rank(&a, &b, alpha)?;
        wilcoxon.push(PairwiseRow {
            reference: ref_label.clone(),
            other: sets[j].0.clone(),
            p_value: r.p_value,
            h: r.reject as u8,
            direction: r.direction,
            statistic: r.statistic,
        });
    }
    let groups = (0..sets.len())
        .map(|j| column(j, &normalized))
        .collect::<Result<Vec<_>>>()?;
    let kw = kruskal_wallis(&groups, alpha)?;

    Ok(Comparison {
        alpha,
        labels: sets.iter().map(|(l, _)| l.clone()).collect(),
        functions,
        means,
        normalized,
        wilcoxon,
        kruskal_wallis: kw,
    })
}

impl Comparison {
    /// Plain-text rendering for the terminal.
    pub fn table(&self) -> String {
        let mut s = String::new();
        writeln!(s, "normalized scores (0 = best)").unwrap();
        write!(s, "{:<10}", "function").unwrap();
        for j in 0..self.labels.len() {
            write!(s, " {:>10}", format!("[{j}]")).unwrap();
        }
        writeln!(s).unwrap();
        for (id, row) in self.functions.iter().zip(&self.normalized) {
            write!(s, "{id:<10}").unwrap();
            for v in row {
                write!(s, " {v:>10.4}").unwrap();
            }
            writeln!(s).unwrap();
        }
        for (j, l) in self.labels.iter().enumerate() {
            writeln!(s, "[{j}] {l}").unwrap();
        }
        writeln!(s, "\nsigned-rank test against [0] (alpha {})", self.alpha).unwrap();
        writeln!(s, "{:>6} {:>12} {:>3} {:>6}", "other", "P", "H", "Ranks").unwrap();
        for (j, row) in self.wilcoxon.iter().enumerate() {
            writeln!(s, "{:>6} {:>12.4e} {:>3} {:>6}", format!("[{}]", j + 1), row.p_value, row.h, row.direction).unwrap();
        }
        let kw = &self.kruskal_wallis;
        writeln!(
            s,
            "\nKruskal-Wallis on normalized scores: H = {:.4}, p = {:.4e}, reject = {}, mean ranks {:?}",
            kw.statistic, kw.p_value, kw.reject, kw.mean_ranks
        )
        .unwrap();
        s
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self).expect("comparison serializes");
        std::fs::write(path, text).map_err(|e| BenchError::io(path, e))
    }
}
