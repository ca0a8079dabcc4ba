//! Squeezing sweeps, file output, reports and the built-in self-check.

mod config;
mod csv;
mod report;
mod svg;
mod sweep;
mod validate;

pub use config::{parse_alpha, StatePreset, SweepConfig};
pub use csv::{format_float, write_csv, write_csv_to, CSV_HEADER};
pub use report::{impropriety_report, report_impropriety, ImproprietyReport, TwoModeVerdict};
pub use svg::{emit_svg, render_svg};
pub use sweep::{run_sweep, SweepRow};
pub use validate::{
    moment_deviation, validate, validate_with, CheckResult, MomentsFn, ValidationReport,
    VALIDATION_SAMPLES,
};

use thiserror::Error;

use crate::detection::DetectionError;
use crate::model::ModelError;

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Detection(#[from] DetectionError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("need at least {needed} plottable rows, got {got}")]
    NotEnoughRows { needed: usize, got: usize },
}

impl ExperimentError {
    pub(crate) fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        ExperimentError::Io {
            path: path.display().to_string(),
            source,
        }
    }
}
