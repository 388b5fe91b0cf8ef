//! Summary statistics over independent runs and the two-sided Wilcoxon
//! rank-sum (Mann-Whitney) test used for the `+ / - / =` marks.

use std::fmt;

use serde::{Deserialize, Serialize};
use statrs::function::erf::erfc;

use crate::error::{Error, Result};

/// Default significance level for marks.
pub const ALPHA: f64 = 0.05;

/// Largest smaller-sample size for which the exact null distribution is used.
pub const EXACT_MAX: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StatsSummary {
    pub best: f64,
    pub mean: f64,
    /// Sample standard deviation (n - 1 denominator).
    pub std: f64,
    pub n_runs: usize,
}

pub fn summarize(values: &[f64]) -> Result<StatsSummary> {
    let n = values.len();
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "need at least 2 runs for a summary, got {n}"
        )));
    }
    let best = values.iter().copied().fold(f64::INFINITY, f64::min);
    let mean = values.iter().sum::<f64>() / n as f64;
    let ss: f64 = values.iter().map(|v| (v - mean).powi(2)).sum();
    Ok(StatsSummary {
        best,
        mean,
        std: (ss / (n - 1) as f64).sqrt(),
        n_runs: n,
    })
}

/// Significance verdict for the first sample against the second, on a
/// minimization problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mark {
    /// First sample significantly better (lower).
    #[serde(rename = "+")]
    Better,
    /// First sample significantly worse.
    #[serde(rename = "-")]
    Worse,
    #[serde(rename = "=")]
    Tie,
}

impl Mark {
    pub fn symbol(self) -> &'static str {
        match self {
            Mark::Better => "+",
            Mark::Worse => "-",
            Mark::Tie => "=",
        }
    }

    pub fn flipped(self) -> Mark {
        match self {
            Mark::Better => Mark::Worse,
            Mark::Worse => Mark::Better,
            Mark::Tie => Mark::Tie,
        }
    }
}

impl fmt::Display for Mark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exact,
    Normal,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WilcoxonResult {
    /// Mann-Whitney U of the first sample: rank sum minus `n(n+1)/2`.
    pub u_statistic: f64,
    pub p_value: f64,
    pub mark: Mark,
    pub method: Method,
}

/// Mid-ranks (1-based) of the pooled values, plus the tie groups' sizes.
pub fn midranks(values: &[f64]) -> (Vec<f64>, Vec<usize>) {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
    let mut ranks = vec![0.0; values.len()];
    let mut ties = Vec::new();
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] == values[order[start]] {
            end += 1;
        }
        let rank = (start + end + 1) as f64 / 2.0;
        for &i in &order[start..end] {
            ranks[i] = rank;
        }
        if end - start > 1 {
            ties.push(end - start);
        }
        start = end;
    }
    (ranks, ties)
}

/// Counts of each U value `0..=n*m` under the null hypothesis, over all
/// `C(n+m, n)` equally likely rank assignments.
pub fn u_distribution(n: usize, m: usize) -> Vec<f64> {
    let (k, m) = (n.min(m), n.max(m));
    let len = k * m + 1;
    // ways[j][u]: orderings of j first-sample and b second-sample values
    // with U = u, for the b reached so far. The largest pooled value is
    // either from the second sample (U unchanged) or from the first, where
    // it beats all b others.
    let mut ways = vec![vec![0.0; len]; k + 1];
    for row in &mut ways {
        row[0] = 1.0;
    }
    for b in 1..=m {
        for j in 1..=k {
            for u in b..len {
                let add = ways[j - 1][u - b];
                ways[j][u] += add;
            }
        }
    }
    ways.swap_remove(k)
}

fn exact_p(u: f64, n: usize, m: usize) -> f64 {
    let counts = u_distribution(n, m);
    let total: f64 = counts.iter().sum();
    // U is an integer without ties
    let u = u.round() as usize;
    let lower: f64 = counts[..=u].iter().sum();
    let upper: f64 = counts[u..].iter().sum();
    (2.0 * lower.min(upper) / total).min(1.0)
}

fn normal_p(u: f64, n: usize, m: usize, ties: &[usize]) -> f64 {
    let (nf, mf) = (n as f64, m as f64);
    let big_n = nf + mf;
    let mean = nf * mf / 2.0;
    let tie_term: f64 = ties.iter().map(|&t| (t * t * t - t) as f64).sum();
    let var = nf * mf / 12.0 * ((big_n + 1.0) - tie_term / (big_n * (big_n - 1.0)));
    if var <= 0.0 {
        return 1.0;
    }
    let z = ((u - mean).abs() - 0.5).max(0.0) / var.sqrt();
    erfc(z / std::f64::consts::SQRT_2).min(1.0)
}

/// Two-sided p-value from the normal approximation with tie-corrected
/// variance and continuity correction, regardless of sample size.
pub fn normal_approx_p(sample_a: &[f64], sample_b: &[f64]) -> Result<f64> {
    let (u, ties) = u_and_ties(sample_a, sample_b)?;
    Ok(normal_p(u, sample_a.len(), sample_b.len(), &ties))
}

fn u_and_ties(sample_a: &[f64], sample_b: &[f64]) -> Result<(f64, Vec<usize>)> {
    if sample_a.is_empty() || sample_b.is_empty() {
        return Err(Error::InvalidArgument(
            "rank-sum test needs non-empty samples".into(),
        ));
    }
    if sample_a.iter().chain(sample_b).any(|v| v.is_nan()) {
        return Err(Error::InvalidArgument(
            "rank-sum test sample contains NaN".into(),
        ));
    }
    let pooled: Vec<f64> = sample_a.iter().chain(sample_b).copied().collect();
    let (ranks, ties) = midranks(&pooled);
    let n = sample_a.len() as f64;
    let rank_sum: f64 = ranks[..sample_a.len()].iter().sum();
    Ok((rank_sum - n * (n + 1.0) / 2.0, ties))
}

/// Two-sided rank-sum test of `sample_a` against `sample_b`. Exact when the
/// smaller sample has at most [`EXACT_MAX`] values and nothing is tied,
/// normal approximation otherwise.
pub fn wilcoxon_rank_sum(sample_a: &[f64], sample_b: &[f64], alpha: f64) -> Result<WilcoxonResult> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "alpha {alpha} not in (0, 1)"
        )));
    }
    let (u, ties) = u_and_ties(sample_a, sample_b)?;
    let (n, m) = (sample_a.len(), sample_b.len());
    let (p_value, method) = if n.min(m) <= EXACT_MAX && ties.is_empty() {
        (exact_p(u, n, m), Method::Exact)
    } else {
        (normal_p(u, n, m, &ties), Method::Normal)
    };
    let centre = (n * m) as f64 / 2.0;
    let mark = if p_value < alpha && u < centre {
        Mark::Better
    } else if p_value < alpha && u > centre {
        Mark::Worse
    } else {
        Mark::Tie
    };
    Ok(WilcoxonResult {
        u_statistic: u,
        p_value,
        mark,
        method,
    })
}
