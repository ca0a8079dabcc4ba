use super::eigen::eig_hermitian;
use super::{ComplexMatrix, LinalgError};

/// Scalar function lifted to Hermitian matrices through the spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectralFn {
    Cosh,
    Sinh,
    Exp,
    /// `x -> cosh(2x)`
    CoshDouble,
}

impl SpectralFn {
    pub fn apply(self, x: f64) -> f64 {
        match self {
            SpectralFn::Cosh => x.cosh(),
            SpectralFn::Sinh => x.sinh(),
            SpectralFn::Exp => x.exp(),
            SpectralFn::CoshDouble => (2.0 * x).cosh(),
        }
    }
}

const PSD_CLAMP: f64 = 1e-10;

/// `V diag(f(l)) V^H` for a Hermitian PSD matrix; eigenvalues in
/// `[-1e-10 * scale, 0)` are clamped to zero first.
pub fn hermitian_matrix_function(
    m: &ComplexMatrix,
    f: SpectralFn,
) -> Result<ComplexMatrix, LinalgError> {
    let eig = eig_hermitian(m)?;
    let scale = 1.0 + eig.values.iter().fold(0.0f64, |a, &x| a.max(x.abs()));
    if let Some(&lowest) = eig.values.last() {
        if lowest < -PSD_CLAMP * scale {
            return Err(LinalgError::NotPositiveSemidefinite(lowest));
        }
    }
    Ok(eig.reassemble(|x| f.apply(x.max(0.0))))
}
