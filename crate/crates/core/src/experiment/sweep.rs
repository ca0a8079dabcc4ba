use rayon::prelude::*;

use super::{ExperimentError, SweepConfig};
use crate::detection::{run_chsh_with, BellResult};
use crate::rng::derive_seed;

/// One grid point of a sweep. `None` marks an undefined quantity (for
/// example a setting pair with no coincidences); `note` says why.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub r: f64,
    /// `C11, C12, C21, C22`.
    pub correlations: [Option<f64>; 4],
    pub stderrs: [Option<f64>; 4],
    pub s: Option<f64>,
    pub s_stderr: Option<f64>,
    pub eta: Option<f64>,
    pub n_coincidence_min: u64,
    pub samples: usize,
    /// Seed actually used for this row, `derive_seed(base, grid_index)`.
    pub seed: u64,
    pub note: Option<String>,
}

impl SweepRow {
    fn from_result(r: f64, samples: usize, seed: u64, res: &BellResult) -> Self {
        let mut reasons = Vec::new();
        for (k, c) in res.correlations.iter().enumerate() {
            if c.is_none() {
                reasons.push(format!("no coincidences for C{}{}", k / 2 + 1, k % 2 + 1));
            }
        }
        if res.eta.is_none() {
            reasons.push(format!("efficiency undefined ({}): a detector never fired", res.efficiency_rule));
        }
        Self {
            r,
            correlations: res.correlations,
            stderrs: res.stderrs,
            s: res.s,
            s_stderr: res.s_stderr,
            eta: res.eta,
            n_coincidence_min: res.min_coincidences(),
            samples,
            seed,
            note: (!reasons.is_empty()).then(|| reasons.join("; ")),
        }
    }
}

/// Runs the CHSH experiment at every grid point. Grid points are evaluated in
/// parallel on the current rayon pool; rows come back in grid order and do
/// not depend on the number of worker threads.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<SweepRow>, ExperimentError> {
    config.validate()?;
    let build = config.state_builder()?;
    config
        .r_grid()
        .into_par_iter()
        .enumerate()
        .map(|(i, r)| {
            let spec = build(r)?;
            let seed = derive_seed(config.seed, i as u64);
            let res = run_chsh_with(
                &spec,
                config.sigma2,
                config.gamma,
                config.samples,
                seed,
                config.efficiency_rule,
            )?;
            Ok(SweepRow::from_result(r, config.samples, seed, &res))
        })
        .collect()
}
