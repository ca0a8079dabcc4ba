use num_complex::Complex64;

use super::{check_sigma2, ModelError, StateMoments};
use crate::linalg::{ComplexMatrix, Lu};

/// Log-density of an improper complex Gaussian in augmented form:
///
/// ```text
/// log f(beta) = -1/2 u^H S^{-1} u - d log(pi) - 1/2 log det S,
/// u = (beta; conj(beta)),  S = [[Gamma, C], [C*, Gamma*]]
/// ```
pub fn log_density(beta: &[Complex64], moments: &StateMoments) -> Result<f64, ModelError> {
    let d = moments.dim();
    if beta.len() != d {
        return Err(ModelError::DimensionMismatch {
            expected: d,
            got: beta.len(),
        });
    }
    let lu = Lu::new(&moments.augmented())?;
    let det = lu.determinant();
    // The augmented covariance is Hermitian PSD; a non-positive determinant
    // means it is singular to working precision.
    if lu.is_singular() || !(det.re > 0.0) || !det.re.is_finite() {
        return Err(ModelError::SingularCovariance);
    }
    let u: Vec<Complex64> = beta.iter().copied().chain(beta.iter().map(|z| z.conj())).collect();
    let x = lu.solve(&u).map_err(|_| ModelError::SingularCovariance)?;
    let quad: f64 = u.iter().zip(&x).map(|(a, b)| (a.conj() * b).re).sum();
    Ok(-0.5 * quad - d as f64 * std::f64::consts::PI.ln() - 0.5 * det.re.ln())
}

/// Closed form for `R = r I`:
/// `-|cosh(r) beta - sinh(r) Q conj(beta)|^2 / sigma2 - d log(pi sigma2)`.
pub fn log_density_isotropic(
    beta: &[Complex64],
    r: f64,
    q: &ComplexMatrix,
    sigma2: f64,
) -> Result<f64, ModelError> {
    check_sigma2(sigma2)?;
    let d = q.rows();
    if beta.len() != d {
        return Err(ModelError::DimensionMismatch {
            expected: d,
            got: beta.len(),
        });
    }
    let conj: Vec<Complex64> = beta.iter().map(|z| z.conj()).collect();
    let q_conj = q.mul_vec(&conj);
    let dist2: f64 = beta
        .iter()
        .zip(&q_conj)
        .map(|(b, qb)| (b * r.cosh() - qb * r.sinh()).norm_sqr())
        .sum();
    Ok(-dist2 / sigma2 - d as f64 * (std::f64::consts::PI * sigma2).ln())
}
