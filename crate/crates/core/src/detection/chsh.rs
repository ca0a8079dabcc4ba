use std::fmt;

use num_complex::Complex64;
use rayon::prelude::*;

use super::events::{check_gamma, classify_row};
use super::{setting_rotation, DetectionError, EventCounts, SettingLabel};
use crate::model::{
    check_sigma2, sample_vacuum_chunk, BogoliubovMap, SqueezingSpec, CHUNK_ROWS,
};

/// Setting pairs in the order `(A1,B1), (A1,B2), (A2,B1), (A2,B2)`, i.e.
/// the correlations `C11, C12, C21, C22`.
pub const SETTING_PAIRS: [(SettingLabel, SettingLabel); 4] = [
    (SettingLabel::A1, SettingLabel::B1),
    (SettingLabel::A1, SettingLabel::B2),
    (SettingLabel::A2, SettingLabel::B1),
    (SettingLabel::A2, SettingLabel::B2),
];

/// Post-selected correlation `(n_hh - n_hv - n_vh + n_vv) / n_coincidence`.
pub fn correlation(counts: &EventCounts) -> Result<f64, DetectionError> {
    let total = counts.coincidences();
    if total == 0 {
        return Err(DetectionError::UndefinedCorrelation);
    }
    let agree = (counts.n_hh + counts.n_vv) as f64;
    let disagree = (counts.n_hv + counts.n_vh) as f64;
    Ok((agree - disagree) / total as f64)
}

/// Binomial standard error `sqrt((1 - C^2) / n_coincidence)`.
pub fn correlation_stderr(counts: &EventCounts) -> Result<f64, DetectionError> {
    let c = correlation(counts)?;
    Ok(((1.0 - c * c).max(0.0) / counts.coincidences() as f64).sqrt())
}

/// `S = |C11 + C12| + |C21 - C22|`.
pub fn bell_statistic(c11: f64, c12: f64, c21: f64, c22: f64) -> Result<f64, DetectionError> {
    for c in [c11, c12, c21, c22] {
        if !(-1.0..=1.0).contains(&c) {
            return Err(DetectionError::OutOfRange(c));
        }
    }
    Ok((c11 + c12).abs() + (c21 - c22).abs())
}

/// How the coincidence efficiency is conditioned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EfficiencyRule {
    /// Probability of an exclusive coincidence given that a particular
    /// detector clicked (double clicks included in the denominator),
    /// minimized over setting pairs and the four detectors.
    #[default]
    PerDetector,
    /// Coincidences over exclusive singles on one side, minimized over
    /// setting pairs and the two sides.
    PerSide,
}

impl fmt::Display for EfficiencyRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EfficiencyRule::PerDetector => "per-detector",
            EfficiencyRule::PerSide => "per-side",
        })
    }
}

/// Coincidence efficiency over all supplied setting pairs.
pub fn efficiency(all_counts: &[EventCounts], rule: EfficiencyRule) -> Result<f64, DetectionError> {
    if all_counts.is_empty() {
        return Err(DetectionError::UndefinedEfficiency);
    }
    let mut eta = f64::INFINITY;
    for counts in all_counts {
        let ratios: Vec<(u64, u64)> = match rule {
            EfficiencyRule::PerDetector => (0..4)
                .map(|k| (counts.coincidences_on(k), counts.clicks[k]))
                .collect(),
            EfficiencyRule::PerSide => vec![
                (counts.coincidences(), counts.n_single_a),
                (counts.coincidences(), counts.n_single_b),
            ],
        };
        for (num, den) in ratios {
            if den == 0 {
                return Err(DetectionError::UndefinedEfficiency);
            }
            eta = eta.min(num as f64 / den as f64);
        }
    }
    Ok(eta)
}

/// Outcome of a four-setting CHSH run on one sample set.
#[derive(Debug, Clone, PartialEq)]
pub struct BellResult {
    /// Tallies per setting pair, ordered as [`SETTING_PAIRS`].
    pub counts: [EventCounts; 4],
    /// `C11, C12, C21, C22`; `None` when a pair saw no coincidences.
    pub correlations: [Option<f64>; 4],
    pub stderrs: [Option<f64>; 4],
    pub s: Option<f64>,
    pub s_stderr: Option<f64>,
    pub eta: Option<f64>,
    pub efficiency_rule: EfficiencyRule,
}

impl BellResult {
    pub fn from_counts(counts: [EventCounts; 4], rule: EfficiencyRule) -> Self {
        let correlations = counts.map(|c| correlation(&c).ok());
        let stderrs = counts.map(|c| correlation_stderr(&c).ok());
        let s = match correlations {
            [Some(a), Some(b), Some(c), Some(d)] => bell_statistic(a, b, c, d).ok(),
            _ => None,
        };
        let s_stderr = if s.is_some() {
            Some(stderrs.iter().map(|e| e.unwrap_or(0.0).powi(2)).sum::<f64>().sqrt())
        } else {
            None
        };
        Self {
            counts,
            correlations,
            stderrs,
            s,
            s_stderr,
            eta: efficiency(&counts, rule).ok(),
            efficiency_rule: rule,
        }
    }

    pub fn min_coincidences(&self) -> u64 {
        self.counts.iter().map(|c| c.coincidences()).min().unwrap_or(0)
    }
}

/// Samples `n` vacuum realizations, squeezes them with `spec`, and measures
/// all four CHSH setting pairs on the same realizations.
///
/// Work is split into [`CHUNK_ROWS`]-row chunks that each draw from their own
/// RNG stream, so the result is identical for any thread count and identical
/// to classifying a materialized `sample_vacuum` batch.
pub fn run_chsh(
    spec: &SqueezingSpec,
    sigma2: f64,
    gamma: f64,
    n: usize,
    seed: u64,
) -> Result<BellResult, DetectionError> {
    run_chsh_with(spec, sigma2, gamma, n, seed, EfficiencyRule::default())
}

pub fn run_chsh_with(
    spec: &SqueezingSpec,
    sigma2: f64,
    gamma: f64,
    n: usize,
    seed: u64,
    rule: EfficiencyRule,
) -> Result<BellResult, DetectionError> {
    if spec.dim() != 4 {
        return Err(DetectionError::WrongModeCount(spec.dim()));
    }
    if n == 0 {
        return Err(DetectionError::InvalidArgument("sample count must be >= 1".into()));
    }
    check_sigma2(sigma2)?;
    check_gamma(gamma)?;
    let map = BogoliubovMap::new(&spec.polar()?)?;
    let settings = SETTING_PAIRS.map(|(a, b)| (setting_rotation(a), setting_rotation(b)));
    let sigma = sigma2.sqrt();
    let g2 = gamma * gamma;
    let chunks = n.div_ceil(CHUNK_ROWS);

    let counts = (0..chunks)
        .into_par_iter()
        .map(|k| {
            let rows = CHUNK_ROWS.min(n - k * CHUNK_ROWS);
            let mut buf = vec![Complex64::new(0.0, 0.0); rows * 4];
            sample_vacuum_chunk(&mut buf, sigma, seed, k as u64);
            map.apply_in_place(&mut buf);
            let mut counts = [EventCounts::default(); 4];
            for row in buf.chunks_exact(4) {
                for (c, (sa, sb)) in counts.iter_mut().zip(&settings) {
                    classify_row(row, sa, sb, g2, c);
                }
            }
            counts
        })
        .reduce(
            || [EventCounts::default(); 4],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    Ok(BellResult::from_counts(counts, rule))
}
