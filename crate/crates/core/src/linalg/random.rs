//! Random matrix ensembles used by the self-checks and tests.

use num_complex::Complex64;
use rand_core::RngCore;

use super::ComplexMatrix;
use crate::rng::{standard_complex_normal, uniform};

/// Matrix with i.i.d. standard complex normal entries.
pub fn ginibre(rng: &mut impl RngCore, n: usize) -> ComplexMatrix {
    let data = (0..n * n).map(|_| standard_complex_normal(rng)).collect();
    ComplexMatrix::from_row_major(n, n, data).expect("finite by construction")
}

/// Haar-distributed unitary: modified Gram-Schmidt on a Ginibre matrix with
/// the diagonal phase of R absorbed into Q.
pub fn random_unitary(rng: &mut impl RngCore, n: usize) -> ComplexMatrix {
    let g = ginibre(rng, n);
    let mut q = ComplexMatrix::zeros(n, n);
    for j in 0..n {
        let mut col = g.column(j);
        for _ in 0..2 {
            for k in 0..j {
                let proj: Complex64 = (0..n).map(|i| q[(i, k)].conj() * col[i]).sum();
                for (i, c) in col.iter_mut().enumerate() {
                    *c -= proj * q[(i, k)];
                }
            }
        }
        let norm = col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for (i, c) in col.into_iter().enumerate() {
            q[(i, j)] = c / norm;
        }
    }
    q
}

/// Symmetric unitary `W W^T` for Haar `W`.
pub fn random_symmetric_unitary(rng: &mut impl RngCore, n: usize) -> ComplexMatrix {
    let w = random_unitary(rng, n);
    w.matmul(&w.transpose())
}

/// Random Hermitian matrix `(G + G^H) / 2`.
pub fn random_hermitian(rng: &mut impl RngCore, n: usize) -> ComplexMatrix {
    ginibre(rng, n).hermitian_part()
}

/// Random Hermitian positive semi-definite matrix `W diag(l) W^H` with
/// eigenvalues uniform on `[0, max_eigenvalue)`.
pub fn random_hermitian_psd(rng: &mut impl RngCore, n: usize, max_eigenvalue: f64) -> ComplexMatrix {
    let w = random_unitary(rng, n);
    let l: Vec<f64> = (0..n).map(|_| max_eigenvalue * uniform(rng)).collect();
    w.matmul(&ComplexMatrix::from_diag_real(&l))
        .matmul(&w.adjoint())
        .hermitian_part()
}

/// Random complex symmetric matrix with spectral norm exactly `norm`
/// (Takagi form `W diag(s) W^T` with the largest `s` equal to `norm`).
pub fn random_symmetric(rng: &mut impl RngCore, n: usize, norm: f64) -> ComplexMatrix {
    let w = random_unitary(rng, n);
    let mut s: Vec<f64> = (0..n).map(|_| uniform(rng)).collect();
    let top = s.iter().copied().fold(0.0, f64::max);
    if top > 0.0 {
        for x in &mut s {
            *x *= norm / top;
        }
    }
    let m = w.matmul(&ComplexMatrix::from_diag_real(&s)).matmul(&w.transpose());
    let mt = m.transpose();
    (&m + &mt).scale(0.5)
}
