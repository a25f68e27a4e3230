use super::special::normal_sf;
use super::{midranks, Direction, SampleSet, StatTestResult};
use crate::error::{Error, Result};

/// Largest number of non-zero differences handled by the exact null distribution.
pub const EXACT_MAX_N: usize = 20;

const MIN_PAIRS: usize = 5;

/// Null distribution of the signed-rank sum for the given doubled ranks.
///
/// Ranks are passed doubled so that mid-ranks stay integral; entry `s` of the
/// result counts the sign assignments whose doubled positive-rank sum is `s`.
pub fn signed_rank_null_counts(doubled_ranks: &[u64]) -> Vec<f64> {
    let total: u64 = doubled_ranks.iter().sum();
    let mut counts = vec![0.0f64; total as usize + 1];
    counts[0] = 1.0;
    let mut reach = 0usize;
    for &r in doubled_ranks {
        let r = r as usize;
        for s in (0..=reach).rev() {
            if counts[s] != 0.0 {
                counts[s + r] += counts[s];
            }
        }
        reach += r;
    }
    counts
}

/// Two-sided Wilcoxon signed-rank test on paired samples.
///
/// Zero differences are dropped and tied magnitudes get mid-ranks. The p-value
/// is exact for up to [`EXACT_MAX_N`] non-zero differences and otherwise uses
/// the normal approximation with tie-corrected variance and a 0.5 continuity
/// correction. The statistic is `min(W+, W-)`. Direction `+` means `a` tends to
/// be lower (better) than `b`.
///
/// When every difference is zero the test has no evidence either way and the
/// result is `p = 1` with direction `=`.
pub fn wilcoxon_signed_rank(a: &SampleSet, b: &SampleSet, alpha: f64) -> Result<StatTestResult> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            actual: b.len(),
        });
    }
    if a.len() < MIN_PAIRS {
        return Err(Error::DegenerateInput(format!(
            "signed-rank test needs at least {MIN_PAIRS} pairs, got {}",
            a.len()
        )));
    }
    let diffs: Vec<f64> = a
        .values
        .iter()
        .zip(&b.values)
        .map(|(x, y)| x - y)
        .filter(|d| *d != 0.0)
        .collect();
    if diffs.is_empty() {
        return Ok(StatTestResult::no_evidence(alpha));
    }
    let n = diffs.len();
    let magnitudes: Vec<f64> = diffs.iter().map(|d| d.abs()).collect();
    let (ranks, ties) = midranks(&magnitudes);
    let doubled: Vec<u64> = ranks.iter().map(|r| (2.0 * r).round() as u64).collect();
    let total2: u64 = doubled.iter().sum();
    let w_plus2: u64 = doubled
        .iter()
        .zip(&diffs)
        .filter(|(_, d)| **d > 0.0)
        .map(|(r, _)| r)
        .sum();
    let w_minus2 = total2 - w_plus2;
    let w_min2 = w_plus2.min(w_minus2);

    let p_value = if n <= EXACT_MAX_N {
        let counts = signed_rank_null_counts(&doubled);
        let lower: f64 = counts[..=w_min2 as usize].iter().sum();
        (2.0 * lower / 2f64.powi(n as i32)).min(1.0)
    } else {
        let nf = n as f64;
        let mean = nf * (nf + 1.0) / 4.0;
        let tie_term: f64 = ties.iter().map(|&t| (t as f64).powi(3) - t as f64).sum::<f64>() / 48.0;
        let var = nf * (nf + 1.0) * (2.0 * nf + 1.0) / 24.0 - tie_term;
        let w_plus = w_plus2 as f64 / 2.0;
        let z = ((w_plus - mean).abs() - 0.5).max(0.0) / var.sqrt();
        (2.0 * normal_sf(z)).min(1.0)
    };

    let reject = p_value < alpha;
    let direction = if !reject {
        Direction::Tie
    } else if w_plus2 < w_minus2 {
        Direction::Better
    } else {
        Direction::Worse
    };
    Ok(StatTestResult {
        statistic: w_min2 as f64 / 2.0,
        p_value,
        reject,
        alpha,
        direction,
        mean_ranks: Vec::new(),
    })
}
