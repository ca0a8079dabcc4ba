//! Cyclic Jacobi eigensolver for small Hermitian matrices.

use num_complex::Complex64;

use super::{ComplexMatrix, LinalgError, HERMITIAN_TOL};

const MAX_SWEEPS: usize = 100;

/// Eigen-decomposition `m = V diag(values) V^H` with eigenvalues sorted in
/// descending order.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    pub fn reconstruct(&self) -> ComplexMatrix {
        self.reassemble(|x| x)
    }

    /// `V diag(f(values)) V^H`.
    pub fn reassemble(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.values.len();
        let fv: Vec<f64> = self.values.iter().map(|&x| f(x)).collect();
        let mut out = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for (k, &w) in fv.iter().enumerate() {
                    acc += self.vectors[(i, k)] * w * self.vectors[(j, k)].conj();
                }
                out[(i, j)] = acc;
            }
        }
        out.hermitian_part()
    }
}

/// Applies the 2x2 unitary `g` on the right to columns `p`, `q`.
pub(crate) fn rotate_columns(m: &mut ComplexMatrix, p: usize, q: usize, g: [[Complex64; 2]; 2]) {
    for k in 0..m.rows() {
        let xp = m[(k, p)];
        let xq = m[(k, q)];
        m[(k, p)] = xp * g[0][0] + xq * g[1][0];
        m[(k, q)] = xp * g[0][1] + xq * g[1][1];
    }
}

/// Applies `g^H` on the left to rows `p`, `q`.
fn rotate_rows_adjoint(m: &mut ComplexMatrix, p: usize, q: usize, g: [[Complex64; 2]; 2]) {
    for k in 0..m.cols() {
        let yp = m[(p, k)];
        let yq = m[(q, k)];
        m[(p, k)] = g[0][0].conj() * yp + g[1][0].conj() * yq;
        m[(q, k)] = g[0][1].conj() * yp + g[1][1].conj() * yq;
    }
}

/// Unitary `diag(1, e^{-i phi}) * [[c, s], [-s, c]]` where the phase removes
/// the argument of the off-diagonal entry and the real rotation annihilates it.
fn jacobi_rotation(app: f64, aqq: f64, apq: Complex64) -> [[Complex64; 2]; 2] {
    let mag = apq.norm();
    let phase = apq / mag;
    let tau = (aqq - app) / (2.0 * mag);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = c * t;
    let e = phase.conj();
    [
        [Complex64::new(c, 0.0), Complex64::new(s, 0.0)],
        [-e * s, e * c],
    ]
}

fn off_diagonal_norm(m: &ComplexMatrix) -> f64 {
    let n = m.rows();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += m[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Eigen-decomposition of a Hermitian matrix.
///
/// The input is symmetrized as `(m + m^H) / 2` after the Hermitian check so
/// round-off asymmetry never leaks into the rotations.
pub fn eig_hermitian(m: &ComplexMatrix) -> Result<HermitianEigen, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if !m.is_hermitian(HERMITIAN_TOL) {
        return Err(LinalgError::NotHermitian(m.hermitian_defect()));
    }
    let n = m.rows();
    let mut a = m.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    let scale = a.frobenius_norm();

    if scale > 0.0 {
        let mut converged = false;
        for _ in 0..MAX_SWEEPS {
            if off_diagonal_norm(&a) <= 1e-15 * scale {
                converged = true;
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    let apq = a[(p, q)];
                    if apq.norm() <= 1e-300 {
                        continue;
                    }
                    let g = jacobi_rotation(a[(p, p)].re, a[(q, q)].re, apq);
                    rotate_columns(&mut a, p, q, g);
                    rotate_rows_adjoint(&mut a, p, q, g);
                    a[(p, q)] = Complex64::new(0.0, 0.0);
                    a[(q, p)] = Complex64::new(0.0, 0.0);
                    a[(p, p)].im = 0.0;
                    a[(q, q)].im = 0.0;
                    rotate_columns(&mut v, p, q, g);
                }
            }
        }
        if !converged && off_diagonal_norm(&a) > 1e-12 * scale {
            return Err(LinalgError::NoConvergence("hermitian eigensolver"));
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut vectors = ComplexMatrix::zeros(n, n);
    for (new, &old) in order.iter().enumerate() {
        for k in 0..n {
            vectors[(k, new)] = v[(k, old)];
        }
    }
    Ok(HermitianEigen { values, vectors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::random::random_hermitian;
    use rand_chacha::ChaCha8Rng;
    use rand_core::SeedableRng;

    #[test]
    fn identity_has_unit_eigenvalues() {
        let e = eig_hermitian(&ComplexMatrix::identity(3)).unwrap();
        assert_eq!(e.values, vec![1.0, 1.0, 1.0]);
        assert!(e.vectors.is_unitary(1e-12));
    }

    #[test]
    fn diagonal_is_sorted_descending() {
        let e = eig_hermitian(&ComplexMatrix::from_diag_real(&[-1.0, 2.0])).unwrap();
        assert_eq!(e.values, vec![2.0, -1.0]);
        // permutation of the identity
        assert!((e.vectors[(1, 0)].norm() - 1.0).abs() < 1e-15);
        assert!((e.vectors[(0, 1)].norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn random_hermitian_reconstructs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let m = random_hermitian(&mut rng, 4);
            let e = eig_hermitian(&m).unwrap();
            assert!(e.reconstruct().distance(&m) <= 1e-10 * m.frobenius_norm());
            assert!(e.vectors.unitarity_defect() <= 1e-10);
            assert!(e.values.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn rejects_non_square_and_non_hermitian() {
        assert!(matches!(
            eig_hermitian(&ComplexMatrix::zeros(2, 3)),
            Err(LinalgError::NotSquare { .. })
        ));
        let m = ComplexMatrix::from_real_rows(&[&[1.0, 2.0], &[0.0, 1.0]]);
        assert!(matches!(eig_hermitian(&m), Err(LinalgError::NotHermitian(_))));
    }
}
