//! Classical model of multi-mode squeezed light.
//!
//! Vacuum modes are standard complex Gaussian vectors `a = sigma z`. A
//! complex symmetric squeezing matrix `xi = R Q` (polar form) drives the
//! classical Bogoliubov map
//!
//! ```text
//! b = cosh(R) a + sinh(R) Q conj(a)
//! ```
//!
//! whose output is an improper complex Gaussian vector with covariance
//! `sigma^2 cosh(2R)` and a non-zero pseudo-covariance. The crate computes
//! these moments, the degree of impropriety `|det C|^2 / (det Gamma)^2`, the
//! augmented density, and simulates amplitude-threshold photodetection with
//! coincidence post-selection to estimate the Bell-CHSH statistic.
//!
//! Modules:
//!
//! - [`linalg`]: Jacobi eigen/SVD, polar decomposition, matrix functions.
//! - [`model`]: squeezing matrices, sampling, moments, impropriety, density.
//! - [`detection`]: threshold detectors, setting rotations, CHSH estimates.
//! - [`experiment`]: squeezing sweeps, CSV/SVG output, reports, self-checks.
//!
//! See `examples/` for one runnable program per capability.

pub mod detection;
pub mod experiment;
pub mod linalg;
pub mod model;
pub mod rng;

pub use num_complex::Complex64;
