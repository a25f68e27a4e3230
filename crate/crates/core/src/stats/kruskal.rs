use super::special::chi_square_sf;
use super::{midranks, Direction, SampleSet, StatTestResult};
use crate::error::{Error, Result};

/// Kruskal-Wallis H test with mid-ranks and tie correction.
///
/// The p-value is the chi-square upper tail with `k - 1` degrees of freedom.
/// Direction compares the first group against the rest: `+` when it has the
/// strictly lowest mean rank and the null is rejected.
pub fn kruskal_wallis(groups: &[SampleSet], alpha: f64) -> Result<StatTestResult> {
    if groups.len() < 2 {
        return Err(Error::DegenerateInput(format!(
            "Kruskal-Wallis needs at least two groups, got {}",
            groups.len()
        )));
    }
    if let Some(g) = groups.iter().find(|g| g.is_empty()) {
        return Err(Error::DegenerateInput(format!("group `{}` is empty", g.label)));
    }
    let pooled: Vec<f64> = groups.iter().flat_map(|g| g.values.iter().copied()).collect();
    let n = pooled.len() as f64;
    let (ranks, ties) = midranks(&pooled);

    // Same statistic as 12/(N(N+1)) sum R_j^2/n_j - 3(N+1), written around the
    // grand mean rank so equal mean ranks give exactly zero.
    let centre = (n + 1.0) / 2.0;
    let mut mean_ranks = Vec::with_capacity(groups.len());
    let mut offset = 0;
    let mut spread = 0.0;
    for g in groups {
        let mean = ranks[offset..offset + g.len()].iter().sum::<f64>() / g.len() as f64;
        spread += g.len() as f64 * (mean - centre).powi(2);
        mean_ranks.push(mean);
        offset += g.len();
    }

    let correction = 1.0
        - ties.iter().map(|&t| (t as f64).powi(3) - t as f64).sum::<f64>() / (n.powi(3) - n);
    if !(correction > 0.0) {
        // every value identical
        return Ok(StatTestResult {
            mean_ranks,
            ..StatTestResult::no_evidence(alpha)
        });
    }
    let h = 12.0 / (n * (n + 1.0)) * spread / correction;
    let p_value = chi_square_sf(h, (groups.len() - 1) as f64).clamp(0.0, 1.0);
    let reject = p_value < alpha;
    let direction = if !reject {
        Direction::Tie
    } else if mean_ranks[1..].iter().all(|&r| mean_ranks[0] < r) {
        Direction::Better
    } else {
        Direction::Worse
    };
    Ok(StatTestResult {
        statistic: h,
        p_value,
        reject,
        alpha,
        direction,
        mean_ranks,
    })
}
