use super::svd::svd;
use super::{ComplexMatrix, LinalgError, HERMITIAN_TOL};

/// `xi = r_part * q_part` with `r_part` Hermitian PSD and `q_part` unitary.
#[derive(Debug, Clone)]
pub struct PolarForm {
    pub r_part: ComplexMatrix,
    pub q_part: ComplexMatrix,
}

impl PolarForm {
    pub fn dim(&self) -> usize {
        self.r_part.rows()
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.r_part.matmul(&self.q_part)
    }

    /// Polar form from explicit parts; both are validated.
    pub fn new(r_part: ComplexMatrix, q_part: ComplexMatrix) -> Result<Self, LinalgError> {
        if !r_part.is_square() || !q_part.is_square() || r_part.rows() != q_part.rows() {
            return Err(LinalgError::Shape(format!(
                "polar parts must be square of equal size, got {}x{} and {}x{}",
                r_part.rows(),
                r_part.cols(),
                q_part.rows(),
                q_part.cols()
            )));
        }
        if !r_part.is_hermitian(HERMITIAN_TOL) {
            return Err(LinalgError::NotHermitian(r_part.hermitian_defect()));
        }
        let defect = q_part.unitarity_defect();
        if defect > 1e-9 {
            return Err(LinalgError::NotUnitary(defect));
        }
        Ok(Self { r_part, q_part })
    }

    /// `R = r I`, arbitrary unitary `Q`.
    pub fn isotropic(r: f64, q_part: ComplexMatrix) -> Result<Self, LinalgError> {
        let n = q_part.rows();
        Self::new(ComplexMatrix::identity(n).scale(r), q_part)
    }

    pub fn zero(n: usize) -> Self {
        Self {
            r_part: ComplexMatrix::zeros(n, n),
            q_part: ComplexMatrix::identity(n),
        }
    }
}

/// Polar decomposition of a complex symmetric matrix through its SVD:
/// `xi = U D V^H` gives `R = U D U^H` and `Q = U V^H`.
///
/// `Q` is only unique on the range of `R`; on degenerate subspaces it
/// follows whatever bases the SVD produced.
pub fn polar_decompose(xi: &ComplexMatrix) -> Result<PolarForm, LinalgError> {
    if !xi.is_square() {
        return Err(LinalgError::NotSquare {
            rows: xi.rows(),
            cols: xi.cols(),
        });
    }
    if !xi.is_symmetric(HERMITIAN_TOL) {
        return Err(LinalgError::NotSymmetric(xi.symmetry_defect()));
    }
    let n = xi.rows();
    if xi.as_slice().iter().all(|z| z.re == 0.0 && z.im == 0.0) {
        return Ok(PolarForm::zero(n));
    }
    let s = svd(xi)?;
    let r_part = s
        .u
        .matmul(&ComplexMatrix::from_diag_real(&s.d))
        .matmul(&s.u.adjoint())
        .hermitian_part();
    let q_part = s.u.matmul(&s.v.adjoint());
    Ok(PolarForm { r_part, q_part })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::eig_hermitian;
    use crate::linalg::random::random_symmetric;
    use num_complex::Complex64;
    use rand_chacha::ChaCha8Rng;
    use rand_core::SeedableRng;

    #[test]
    fn zero_gives_identity_q() {
        let p = polar_decompose(&ComplexMatrix::zeros(3, 3)).unwrap();
        assert_eq!(p.r_part, ComplexMatrix::zeros(3, 3));
        assert_eq!(p.q_part, ComplexMatrix::identity(3));
    }

    #[test]
    fn scaled_identity_is_already_polar() {
        let xi = ComplexMatrix::identity(3).scale(0.7);
        let p = polar_decompose(&xi).unwrap();
        assert!(p.r_part.distance(&xi) < 1e-14);
        assert!(p.q_part.distance(&ComplexMatrix::identity(3)) < 1e-14);
    }

    #[test]
    fn rejects_asymmetric() {
        let xi = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]);
        assert!(matches!(polar_decompose(&xi), Err(LinalgError::NotSymmetric(_))));
    }

    #[test]
    fn random_symmetric_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for n in 1..=6 {
            let xi = random_symmetric(&mut rng, n, 1.5);
            let p = polar_decompose(&xi).unwrap();
            let tol = 1e-9 * (1.0 + xi.frobenius_norm());
            assert!(p.reconstruct().distance(&xi) <= tol);
            assert!(p.q_part.unitarity_defect() <= tol);
            let e = eig_hermitian(&p.r_part).unwrap();
            assert!(e.values.iter().all(|&x| x >= -tol));
        }
    }

    #[test]
    fn complex_phase_in_input() {
        let z = Complex64::from_polar(0.8, 0.3);
        let xi = ComplexMatrix::from_row_major(2, 2, vec![Complex64::new(0.0, 0.0), z, z, Complex64::new(0.0, 0.0)]).unwrap();
        let p = polar_decompose(&xi).unwrap();
        assert!(p.r_part.distance(&ComplexMatrix::identity(2).scale(0.8)) < 1e-12);
        assert!(p.reconstruct().distance(&xi) < 1e-12);
    }
}
