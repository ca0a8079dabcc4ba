use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use num_complex::Complex64;

use super::ExperimentError;
use crate::detection::EfficiencyRule;
use crate::model::{
    two_photon_squeezing, SqueezingSpec, BELL_SINGLET_ALPHA, SEPARABLE_UNIFORM_ALPHA,
};

pub(crate) type StateBuilder = Box<dyn Fn(f64) -> Result<SqueezingSpec, ExperimentError> + Sync>;

/// Source of the squeezing matrix at each grid point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StatePreset {
    /// `alpha = (0, 1/sqrt 2, -1/sqrt 2, 0)`.
    #[default]
    BellSinglet,
    /// `alpha = (1/2, 1/2, 1/2, 1/2)`.
    SeparableUniform,
    /// Matrix read from `xi_file`, taken as the `r = 1` shape and scaled by `r`.
    CustomFile,
}

impl StatePreset {
    pub fn name(self) -> &'static str {
        match self {
            StatePreset::BellSinglet => "bell-singlet",
            StatePreset::SeparableUniform => "separable-uniform",
            StatePreset::CustomFile => "custom-file",
        }
    }
}

impl fmt::Display for StatePreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatePreset {
    type Err = ExperimentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "bell-singlet" => Ok(StatePreset::BellSinglet),
            "separable-uniform" => Ok(StatePreset::SeparableUniform),
            "custom-file" => Ok(StatePreset::CustomFile),
            other => Err(ExperimentError::Config(format!("unknown state {other:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub r_min: f64,
    pub r_max: f64,
    pub r_steps: usize,
    pub samples: usize,
    pub seed: u64,
    pub gamma: f64,
    pub sigma2: f64,
    pub state: StatePreset,
    /// Overrides the preset amplitudes when set.
    pub alpha: Option<[Complex64; 4]>,
    pub xi_file: Option<PathBuf>,
    pub efficiency_rule: EfficiencyRule,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            r_min: 0.0,
            r_max: 3.0,
            r_steps: 31,
            samples: 1 << 20,
            seed: 0,
            gamma: 1.0,
            sigma2: 0.5,
            state: StatePreset::BellSinglet,
            alpha: None,
            xi_file: None,
            efficiency_rule: EfficiencyRule::PerDetector,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), ExperimentError> {
        let bad = |msg: String| Err(ExperimentError::Config(msg));
        if !(self.r_min.is_finite() && self.r_max.is_finite()) {
            return bad("r range must be finite".into());
        }
        if self.r_min < 0.0 {
            return bad(format!("r_min must be >= 0, got {}", self.r_min));
        }
        if self.r_min > self.r_max {
            return bad(format!("r_min {} exceeds r_max {}", self.r_min, self.r_max));
        }
        if self.r_steps == 0 {
            return bad("r_steps must be >= 1".into());
        }
        if self.samples == 0 {
            return bad("samples must be >= 1".into());
        }
        if !(self.gamma.is_finite() && self.gamma >= 0.0) {
            return bad(format!("gamma must be finite and >= 0, got {}", self.gamma));
        }
        if !(self.sigma2.is_finite() && self.sigma2 > 0.0) {
            return bad(format!("sigma2 must be finite and > 0, got {}", self.sigma2));
        }
        if self.state == StatePreset::CustomFile && self.xi_file.is_none() && self.alpha.is_none() {
            return bad("state custom-file needs an xi file".into());
        }
        Ok(())
    }

    /// Uniform grid from `r_min` to `r_max`, both endpoints included when
    /// `r_steps > 1`.
    pub fn r_grid(&self) -> Vec<f64> {
        let n = self.r_steps;
        if n <= 1 {
            return vec![self.r_min];
        }
        let span = self.r_max - self.r_min;
        (0..n)
            .map(|i| {
                if i == n - 1 {
                    self.r_max
                } else {
                    self.r_min + span * (i as f64 / (n - 1) as f64)
                }
            })
            .collect()
    }

    /// Returns a builder for the squeezing matrix at a given `r`. The file,
    /// if any, is read once here.
    pub(crate) fn state_builder(
        &self,
    ) -> Result<StateBuilder, ExperimentError> {
        if let Some(alpha) = self.alpha {
            return Ok(Box::new(move |r| Ok(two_photon_squeezing(alpha, r)?)));
        }
        match self.state {
            StatePreset::BellSinglet => {
                Ok(Box::new(|r| Ok(two_photon_squeezing(BELL_SINGLET_ALPHA, r)?)))
            }
            StatePreset::SeparableUniform => {
                Ok(Box::new(|r| Ok(two_photon_squeezing(SEPARABLE_UNIFORM_ALPHA, r)?)))
            }
            StatePreset::CustomFile => {
                let path = self
                    .xi_file
                    .as_ref()
                    .ok_or_else(|| ExperimentError::Config("state custom-file needs an xi file".into()))?;
                let base = SqueezingSpec::load(path)?;
                Ok(Box::new(move |r| Ok(SqueezingSpec::new(base.xi().scale(r))?)))
            }
        }
    }
}

/// Parses `a1r,a1i,a2r,a2i,a3r,a3i,a4r,a4i`.
pub fn parse_alpha(text: &str) -> Result<[Complex64; 4], ExperimentError> {
    let values: Vec<f64> = text
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| ExperimentError::Config(format!("alpha: {e}")))?;
    if values.len() != 8 {
        return Err(ExperimentError::Config(format!(
            "alpha needs 8 numbers (re,im for 4 amplitudes), got {}",
            values.len()
        )));
    }
    let mut alpha = [Complex64::new(0.0, 0.0); 4];
    for (k, a) in alpha.iter_mut().enumerate() {
        *a = Complex64::new(values[2 * k], values[2 * k + 1]);
    }
    Ok(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid() {
        let grid = SweepConfig::default().r_grid();
        assert_eq!(grid.len(), 31);
        assert_eq!(grid[0], 0.0);
        assert_eq!(grid[30], 3.0);
        assert!((grid[5] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn single_point_grid() {
        let cfg = SweepConfig {
            r_min: 0.7,
            r_max: 2.0,
            r_steps: 1,
            ..Default::default()
        };
        assert_eq!(cfg.r_grid(), vec![0.7]);
    }

    #[test]
    fn rejects_bad_configs() {
        let base = SweepConfig::default();
        for cfg in [
            SweepConfig { r_min: 2.0, r_max: 1.0, ..base.clone() },
            SweepConfig { r_steps: 0, ..base.clone() },
            SweepConfig { samples: 0, ..base.clone() },
            SweepConfig { gamma: -1.0, ..base.clone() },
            SweepConfig { sigma2: 0.0, ..base.clone() },
            SweepConfig { state: StatePreset::CustomFile, ..base.clone() },
        ] {
            assert!(cfg.validate().is_err(), "{cfg:?}");
        }
        assert!(base.validate().is_ok());
    }

    #[test]
    fn alpha_parsing() {
        let a = parse_alpha("0,0, 0.5,0.5, -1,0, 0,2").unwrap();
        assert_eq!(a[1], Complex64::new(0.5, 0.5));
        assert_eq!(a[3], Complex64::new(0.0, 2.0));
        assert!(parse_alpha("1,2,3").is_err());
        assert!(parse_alpha("1,2,3,4,5,6,7,x").is_err());
    }

    #[test]
    fn preset_names_round_trip() {
        for p in [StatePreset::BellSinglet, StatePreset::SeparableUniform, StatePreset::CustomFile] {
            assert_eq!(p.name().parse::<StatePreset>().unwrap(), p);
        }
    }
}
