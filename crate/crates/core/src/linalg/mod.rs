//! Dense complex linear algebra for small matrices (d up to about 16).
//!
//! Everything here is built on Jacobi rotations: a cyclic two-sided sweep for
//! Hermitian eigenproblems and a one-sided (Hestenes) sweep for the SVD.

mod eigen;
mod func;
mod lu;
mod matrix;
mod polar;
pub mod random;
mod svd;

pub use eigen::{eig_hermitian, HermitianEigen};
pub use func::{hermitian_matrix_function, SpectralFn};
pub use lu::{determinant, Lu};
pub use matrix::ComplexMatrix;
pub use polar::{polar_decompose, PolarForm};
pub use svd::{svd, SvdResult};

use thiserror::Error;

/// Relative tolerance for Hermitian and symmetry checks.
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Relative tolerance for reconstruction checks.
pub const RECONSTRUCTION_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinalgError {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("shape error: {0}")]
    Shape(String),
    #[error("matrix contains NaN or infinite entries")]
    NonFinite,
    #[error("matrix is not Hermitian (defect {0:.3e})")]
    NotHermitian(f64),
    #[error("matrix is not symmetric (defect {0:.3e})")]
    NotSymmetric(f64),
    #[error("matrix is not unitary (defect {0:.3e})")]
    NotUnitary(f64),
    #[error("matrix is not positive semi-definite (eigenvalue {0:.3e})")]
    NotPositiveSemidefinite(f64),
    #[error("matrix is singular")]
    Singular,
    #[error("{0} did not converge")]
    NoConvergence(&'static str),
}
