//! One-sided (Hestenes) Jacobi SVD for small complex matrices.

use num_complex::Complex64;

use super::eigen::rotate_columns;
use super::{ComplexMatrix, LinalgError};

const MAX_SWEEPS: usize = 100;

/// `m = u * diag(d) * v^H` with `d` non-negative and descending.
#[derive(Debug, Clone)]
pub struct SvdResult {
    pub u: ComplexMatrix,
    pub d: Vec<f64>,
    pub v: ComplexMatrix,
}

impl SvdResult {
    pub fn reconstruct(&self) -> ComplexMatrix {
        self.u
            .matmul(&ComplexMatrix::from_diag_real(&self.d))
            .matmul(&self.v.adjoint())
    }
}

/// Singular value decomposition of a square matrix.
pub fn svd(m: &ComplexMatrix) -> Result<SvdResult, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if !m.is_finite() {
        return Err(LinalgError::NonFinite);
    }
    let n = m.rows();
    let mut a = m.clone();
    let mut v = ComplexMatrix::identity(n);
    let eps = f64::EPSILON;

    let mut converged = n < 2;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let (mut alpha, mut beta, mut gamma) = (0.0, 0.0, Complex64::new(0.0, 0.0));
                for k in 0..n {
                    let ap = a[(k, p)];
                    let aq = a[(k, q)];
                    alpha += ap.norm_sqr();
                    beta += aq.norm_sqr();
                    gamma += ap.conj() * aq;
                }
                let g = gamma.norm();
                if g == 0.0 || g <= eps * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                // Phase-align column q, then a real rotation diagonalizes the
                // 2x2 Gram block [[alpha, g], [g, beta]].
                let e = (gamma / g).conj();
                let zeta = (beta - alpha) / (2.0 * g);
                let t = if zeta >= 0.0 {
                    1.0 / (zeta + (1.0 + zeta * zeta).sqrt())
                } else {
                    -1.0 / (-zeta + (1.0 + zeta * zeta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                let rot = [
                    [Complex64::new(c, 0.0), Complex64::new(s, 0.0)],
                    [-e * s, e * c],
                ];
                rotate_columns(&mut a, p, q, rot);
                rotate_columns(&mut v, p, q, rot);
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(LinalgError::NoConvergence("jacobi svd"));
    }

    let norms: Vec<f64> = (0..n)
        .map(|j| (0..n).map(|k| a[(k, j)].norm_sqr()).sum::<f64>().sqrt())
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| norms[j].total_cmp(&norms[i]));

    let largest = norms.iter().copied().fold(0.0, f64::max);
    let cutoff = largest * (n as f64) * eps;

    let mut d = vec![0.0; n];
    let mut u = ComplexMatrix::zeros(n, n);
    let mut v_sorted = ComplexMatrix::zeros(n, n);
    let mut filled = Vec::with_capacity(n);
    for (new, &old) in order.iter().enumerate() {
        for k in 0..n {
            v_sorted[(k, new)] = v[(k, old)];
        }
        let sigma = norms[old];
        if sigma > cutoff && sigma > 0.0 {
            d[new] = sigma;
            for k in 0..n {
                u[(k, new)] = a[(k, old)] / sigma;
            }
            filled.push(new);
        }
    }
    // Left vectors of numerically zero singular values span the orthogonal
    // complement; complete them by Gram-Schmidt over the standard basis.
    let mut basis = 0;
    for col in 0..n {
        if filled.contains(&col) {
            continue;
        }
        d[col] = 0.0;
        loop {
            assert!(basis < n, "failed to complete unitary basis");
            let mut cand = vec![Complex64::new(0.0, 0.0); n];
            cand[basis] = Complex64::new(1.0, 0.0);
            basis += 1;
            for _ in 0..2 {
                for &j in &filled {
                    let proj: Complex64 = (0..n).map(|k| u[(k, j)].conj() * cand[k]).sum();
                    for (k, c) in cand.iter_mut().enumerate() {
                        *c -= proj * u[(k, j)];
                    }
                }
            }
            let norm = cand.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm > 1e-6 {
                for (k, c) in cand.into_iter().enumerate() {
                    u[(k, col)] = c / norm;
                }
                filled.push(col);
                break;
            }
        }
    }

    Ok(SvdResult { u, d, v: v_sorted })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::random::{ginibre, random_unitary};
    use rand_chacha::ChaCha8Rng;
    use rand_core::SeedableRng;

    fn check(m: &ComplexMatrix, s: &SvdResult) {
        let tol = 1e-9 * (1.0 + m.frobenius_norm());
        assert!(s.reconstruct().distance(m) <= tol, "reconstruction");
        assert!(s.u.unitarity_defect() <= 1e-9, "U unitary");
        assert!(s.v.unitarity_defect() <= 1e-9, "V unitary");
        assert!(s.d.windows(2).all(|w| w[0] >= w[1]));
        assert!(s.d.iter().all(|&x| x >= 0.0));
    }

    #[test]
    fn zero_matrix() {
        let m = ComplexMatrix::zeros(4, 4);
        let s = svd(&m).unwrap();
        assert_eq!(s.d, vec![0.0; 4]);
        check(&m, &s);
    }

    #[test]
    fn unitary_has_unit_singular_values() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let q = random_unitary(&mut rng, 5);
        let s = svd(&q).unwrap();
        for x in &s.d {
            assert!((x - 1.0).abs() < 1e-12);
        }
        check(&q, &s);
    }

    #[test]
    fn random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 1..=8 {
            let m = ginibre(&mut rng, n);
            check(&m, &svd(&m).unwrap());
        }
    }

    #[test]
    fn rank_deficient() {
        let m = ComplexMatrix::from_real_rows(&[
            &[1.0, 2.0, 3.0],
            &[2.0, 4.0, 6.0],
            &[0.0, 0.0, 0.0],
        ]);
        let s = svd(&m).unwrap();
        assert!((s.d[0] - 70f64.sqrt()).abs() < 1e-12);
        assert_eq!(&s.d[1..], &[0.0, 0.0]);
        check(&m, &s);
    }
}
