//! The classical squeezed-state model.

mod density;
mod moments;
mod sampling;
mod separability;
mod spec;

pub use density::{log_density, log_density_isotropic};
pub use moments::{
    analytic_moments, empirical_moments, impropriety, impropriety_isotropic, StateMoments,
};
pub use sampling::{
    bogoliubov_transform, sample_vacuum, sample_vacuum_chunk, BogoliubovMap, SampleBatch,
    CHUNK_ROWS,
};
pub use separability::{separability_threshold, SeparabilityVerdict};
pub use spec::{
    symmetric_two_mode_squeezing, two_photon_squeezing, Mode, SqueezingSpec, XiDocument,
    BELL_SINGLET_ALPHA, SEPARABLE_UNIFORM_ALPHA,
};

use thiserror::Error;

use crate::linalg::LinalgError;

/// Modal variance of the pure vacuum.
pub const VACUUM_SIGMA2: f64 = 0.5;

#[derive(Debug, Error)]
pub enum ModelError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("dimension mismatch: expected {expected} modes, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("covariance is singular")]
    SingularCovariance,
    #[error("failed to parse squeezing matrix: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub(crate) fn check_sigma2(sigma2: f64) -> Result<(), ModelError> {
    if sigma2.is_finite() && sigma2 > 0.0 {
        Ok(())
    } else {
        Err(ModelError::InvalidArgument(format!(
            "sigma2 must be positive and finite, got {sigma2}"
        )))
    }
}
