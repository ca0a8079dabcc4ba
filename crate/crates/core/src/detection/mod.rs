//! Threshold photodetection, measurement settings and CHSH post-selection.
//!
//! Each side (Alice: modes AH, AV; Bob: modes BH, BV) rotates its two-mode
//! amplitude pair with the setting's unitary and then thresholds each channel
//! independently. Only realizations in which exactly one channel fires on
//! each side enter the correlation estimate.

mod chsh;
mod events;
mod setting;

pub use chsh::{
    bell_statistic, correlation, correlation_stderr, efficiency, run_chsh, run_chsh_with,
    BellResult, EfficiencyRule, SETTING_PAIRS,
};
pub use events::{classify_events, threshold_detect, EventCounts, SideOutcome};
pub use setting::{setting_rotation, MeasurementSetting, SettingLabel};

use thiserror::Error;

use crate::linalg::LinalgError;
use crate::model::ModelError;

/// Classical CHSH bound.
pub const CLASSICAL_BOUND: f64 = 2.0;
/// Tsirelson bound `2 sqrt 2`.
pub const TSIRELSON_BOUND: f64 = 2.0 * std::f64::consts::SQRT_2;

#[derive(Debug, Error)]
pub enum DetectionError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("unknown measurement setting {0:?}")]
    UnknownSetting(String),
    #[error("invalid rotation: {0}")]
    InvalidRotation(String),
    #[error("detection needs 4 modes (AH, AV, BH, BV), got {0}")]
    WrongModeCount(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("undefined correlation: no coincidences")]
    UndefinedCorrelation,
    #[error("undefined efficiency: a detector or side never fired")]
    UndefinedEfficiency,
    #[error("correlation {0} outside [-1, 1]")]
    OutOfRange(f64),
}

impl From<LinalgError> for DetectionError {
    fn from(e: LinalgError) -> Self {
        DetectionError::Model(ModelError::Linalg(e))
    }
}
