//! Summary statistics and the uniformity test used on sampler output.

use crate::error::{Error, Result};
use crate::special::reg_gamma_q;

/// Moments and extremes of a batch of samples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SummaryStats {
    pub n_samples: u64,
    pub mean: f64,
    /// Standard error of the mean (zero for a single sample).
    pub std_error: f64,
    pub min: f64,
    pub max: f64,
}

impl SummaryStats {
    /// Summarize a non-empty batch.
    ///
    /// Sums are Neumaier-compensated and taken in the slice's order, so the
    /// result depends only on the sample values and their order — never on
    /// how many threads produced them.
    pub fn from_samples(samples: &[f64]) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::Domain("summary of an empty sample set".into()));
        }
        let n = samples.len() as f64;
        let mean = compensated_sum(samples.iter().copied()) / n;
        let var_sum = compensated_sum(samples.iter().map(|&x| (x - mean) * (x - mean)));
        let std_error = if samples.len() > 1 {
            (var_sum / (n - 1.0) / n).sqrt()
        } else {
            0.0
        };
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        for &x in samples {
            min = min.min(x);
            max = max.max(x);
        }
        Ok(SummaryStats {
            n_samples: samples.len() as u64,
            mean,
            std_error,
            min,
            max,
        })
    }
}

fn compensated_sum(values: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0_f64;
    let mut comp = 0.0_f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// Pearson chi-square test result against the uniform null.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiSquareResult {
    pub statistic: f64,
    pub dof: u64,
    /// Upper-tail probability of chi-square(dof) at `statistic`.
    pub p_value: f64,
}

/// Pearson goodness-of-fit statistic for observed cell counts against the
/// uniform distribution over the cells.
pub fn chi_square_uniform(counts: &[u64]) -> Result<ChiSquareResult> {
    if counts.len() < 2 {
        return Err(Error::Domain(format!(
            "chi-square needs at least 2 cells, got {}",
            counts.len()
        )));
    }
    let total: u64 = counts.iter().sum();
    if total == 0 {
        return Err(Error::Domain("chi-square needs a non-zero total count".into()));
    }
    let expected = total as f64 / counts.len() as f64;
    let statistic = compensated_sum(counts.iter().map(|&o| {
        let d = o as f64 - expected;
        d * d / expected
    }));
    let dof = (counts.len() - 1) as u64;
    let p_value = reg_gamma_q(dof as f64 / 2.0, statistic / 2.0);
    Ok(ChiSquareResult {
        statistic,
        dof,
        p_value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_of_constant_samples() {
        let s = SummaryStats::from_samples(&[0.5, 0.5, 0.5]).unwrap();
        assert_eq!(s.n_samples, 3);
        assert_eq!(s.mean, 0.5);
        assert_eq!(s.std_error, 0.0);
        assert_eq!(s.min, 0.5);
        assert_eq!(s.max, 0.5);
    }

    #[test]
    fn summary_basic_moments() {
        let s = SummaryStats::from_samples(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        assert!((s.mean - 2.5).abs() < 1e-15);
        // sample variance 5/3, SE = sqrt(5/3/4)
        assert!((s.std_error - (5.0 / 3.0_f64 / 4.0).sqrt()).abs() < 1e-15);
        assert_eq!(s.min, 1.0);
        assert_eq!(s.max, 4.0);
        assert!(s.min <= s.mean && s.mean <= s.max);
    }

    #[test]
    fn summary_single_sample() {
        let s = SummaryStats::from_samples(&[7.25]).unwrap();
        assert_eq!(s.n_samples, 1);
        assert_eq!(s.std_error, 0.0);
        assert_eq!(s.mean, 7.25);
    }

    #[test]
    fn summary_rejects_empty() {
        assert!(matches!(
            SummaryStats::from_samples(&[]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn chi_square_perfectly_uniform() {
        let r = chi_square_uniform(&[10, 10, 10, 10]).unwrap();
        assert_eq!(r.statistic, 0.0);
        assert_eq!(r.dof, 3);
        assert_eq!(r.p_value, 1.0);
    }

    #[test]
    fn chi_square_hand_value() {
        // Two cells, all mass in one: (20-10)²/10 + (0-10)²/10 = 20.
        let r = chi_square_uniform(&[20, 0]).unwrap();
        assert!((r.statistic - 20.0).abs() < 1e-12);
        assert_eq!(r.dof, 1);
        // Q(1/2, 10), frozen from a high-precision evaluation.
        assert!((r.p_value - 7.744_216_431_04e-6).abs() < 1e-15);
    }

    #[test]
    fn chi_square_rejects_degenerate_input() {
        assert!(matches!(chi_square_uniform(&[]), Err(Error::Domain(_))));
        assert!(matches!(chi_square_uniform(&[5]), Err(Error::Domain(_))));
        assert!(matches!(chi_square_uniform(&[0, 0]), Err(Error::Domain(_))));
    }

    #[test]
    fn chi_square_p_decreases_with_statistic() {
        // Fixed dof = 3; growing imbalance must shrink the p-value.
        let mut prev = f64::INFINITY;
        for spread in [0u64, 2, 4, 8, 16] {
            let r = chi_square_uniform(&[20 + spread, 20, 20, 20 - spread]).unwrap();
            let p = r.p_value;
            assert!(p <= prev, "spread={spread}: p={p} prev={prev}");
            prev = p;
        }
    }
}
