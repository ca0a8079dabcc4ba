use num_complex::Complex64;
use rayon::prelude::*;

use super::{check_sigma2, ModelError, SampleBatch, CHUNK_ROWS};
use crate::linalg::{determinant, hermitian_matrix_function, ComplexMatrix, PolarForm, SpectralFn};

/// Second-order description of a zero-mean complex Gaussian vector.
#[derive(Debug, Clone)]
pub struct StateMoments {
    /// Covariance `E[b b^H]`.
    pub gamma: ComplexMatrix,
    /// Pseudo-covariance `E[b b^T]`.
    pub c: ComplexMatrix,
    pub sigma2: f64,
}

impl StateMoments {
    pub fn dim(&self) -> usize {
        self.gamma.rows()
    }

    /// Augmented covariance `[[Gamma, C], [C*, Gamma*]]`.
    pub fn augmented(&self) -> ComplexMatrix {
        let d = self.dim();
        let mut aug = ComplexMatrix::zeros(2 * d, 2 * d);
        aug.set_block(0, 0, &self.gamma);
        aug.set_block(0, d, &self.c);
        aug.set_block(d, 0, &self.c.conj());
        aug.set_block(d, d, &self.gamma.conj());
        aug
    }
}

/// Moments of `b = cosh(R) a + sinh(R) Q conj(a)` for vacuum variance `sigma2`:
///
/// ```text
/// Gamma = sigma2 cosh(2R)
/// C     = sigma2 [cosh(R) Q^T sinh(R)^T + sinh(R) Q cosh(R)^T]
/// ```
pub fn analytic_moments(polar: &PolarForm, sigma2: f64) -> Result<StateMoments, ModelError> {
    check_sigma2(sigma2)?;
    let r = &polar.r_part;
    let cosh_r = hermitian_matrix_function(r, SpectralFn::Cosh)?;
    let sinh_r = hermitian_matrix_function(r, SpectralFn::Sinh)?;
    let gamma = hermitian_matrix_function(r, SpectralFn::CoshDouble)?.scale(sigma2);
    let q = &polar.q_part;
    let first = cosh_r.matmul(&q.transpose()).matmul(&sinh_r.transpose());
    let second = sinh_r.matmul(q).matmul(&cosh_r.transpose());
    let c = (&first + &second).scale(sigma2);
    Ok(StateMoments { gamma, c, sigma2 })
}

fn accumulate(rows: &[Complex64], d: usize) -> (Vec<Complex64>, Vec<Complex64>) {
    let mut g = vec![Complex64::new(0.0, 0.0); d * d];
    let mut c = vec![Complex64::new(0.0, 0.0); d * d];
    for row in rows.chunks_exact(d) {
        for i in 0..d {
            for j in i..d {
                g[i * d + j] += row[i] * row[j].conj();
                c[i * d + j] += row[i] * row[j];
            }
        }
    }
    (g, c)
}

/// Sample moments `(1/n) sum b b^H` and `(1/n) sum b b^T`.
///
/// Only the upper triangle is accumulated and then mirrored, so the estimate
/// is exactly Hermitian / symmetric. Partial sums are formed per chunk and
/// combined in chunk order.
pub fn empirical_moments(b: &SampleBatch) -> Result<StateMoments, ModelError> {
    if b.n() < 2 {
        return Err(ModelError::InvalidArgument(format!(
            "need at least 2 realizations, got {}",
            b.n()
        )));
    }
    let d = b.d();
    let partials: Vec<_> = b
        .amplitudes()
        .par_chunks(CHUNK_ROWS * d)
        .map(|chunk| accumulate(chunk, d))
        .collect();
    let mut g = vec![Complex64::new(0.0, 0.0); d * d];
    let mut c = vec![Complex64::new(0.0, 0.0); d * d];
    for (pg, pc) in partials {
        for k in 0..d * d {
            g[k] += pg[k];
            c[k] += pc[k];
        }
    }
    let inv_n = 1.0 / b.n() as f64;
    let mut gamma = ComplexMatrix::zeros(d, d);
    let mut pseudo = ComplexMatrix::zeros(d, d);
    for i in 0..d {
        for j in i..d {
            let gij = g[i * d + j] * inv_n;
            let cij = c[i * d + j] * inv_n;
            gamma[(i, j)] = gij;
            gamma[(j, i)] = gij.conj();
            pseudo[(i, j)] = cij;
            pseudo[(j, i)] = cij;
        }
        gamma[(i, i)].im = 0.0;
    }
    Ok(StateMoments {
        gamma,
        c: pseudo,
        sigma2: b.sigma2(),
    })
}

/// Degree of impropriety `|det C|^2 / (det Gamma)^2`, in `[0, 1]`.
pub fn impropriety(moments: &StateMoments) -> Result<f64, ModelError> {
    let det_gamma = determinant(&moments.gamma)?;
    let det_c = determinant(&moments.c)?;
    // Gamma is Hermitian so its determinant is real.
    let dg = det_gamma.re;
    if !(dg > 0.0) || !dg.is_finite() {
        return Err(ModelError::SingularCovariance);
    }
    let value = det_c.norm_sqr() / (dg * dg);
    Ok(value.clamp(0.0, 1.0))
}

/// `tanh(2r)^(2d)`: impropriety of `R = r I` for any unitary `Q` and any
/// `sigma2`.
pub fn impropriety_isotropic(r: f64, d: usize) -> Result<f64, ModelError> {
    if !(r >= 0.0) {
        return Err(ModelError::InvalidArgument(format!("r must be >= 0, got {r}")));
    }
    if d == 0 {
        return Err(ModelError::InvalidArgument("d must be >= 1".into()));
    }
    Ok((2.0 * r).tanh().powi(2 * d as i32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::random::{random_symmetric, random_symmetric_unitary};
    use crate::linalg::{eig_hermitian, polar_decompose};
    use crate::model::{
        bogoliubov_transform, sample_vacuum, symmetric_two_mode_squeezing, two_photon_squeezing,
        BELL_SINGLET_ALPHA, SEPARABLE_UNIFORM_ALPHA,
    };
    use proptest::prelude::*;
    use rand_chacha::ChaCha8Rng;
    use rand_core::SeedableRng;

    #[test]
    fn unsqueezed_is_proper() {
        let m = analytic_moments(&PolarForm::zero(3), 0.7).unwrap();
        assert!(m.gamma.distance(&ComplexMatrix::identity(3).scale(0.7)) < 1e-15);
        assert_eq!(m.c.max_abs(), 0.0);
        assert_eq!(impropriety(&m).unwrap(), 0.0);
    }

    #[test]
    fn isotropic_pseudo_covariance_is_scaled_q() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let q = random_symmetric_unitary(&mut rng, 3);
        let r = 0.6;
        let polar = PolarForm::isotropic(r, q.clone()).unwrap();
        let m = analytic_moments(&polar, 0.5).unwrap();
        let expect = q.scale(0.5 * (2.0 * r).sinh());
        assert!(m.c.distance(&expect) < 1e-12);
    }

    #[test]
    fn separable_case_has_singular_c() {
        let spec = two_photon_squeezing(SEPARABLE_UNIFORM_ALPHA, 1.0).unwrap();
        let m = analytic_moments(&spec.polar().unwrap(), 0.5).unwrap();
        assert!(determinant(&m.c).unwrap().norm() < 1e-9);
        assert!(m.c.max_abs() > 0.1);
        assert!(impropriety(&m).unwrap() < 1e-9);
    }

    #[test]
    fn isotropic_closed_form() {
        assert_eq!(impropriety_isotropic(0.0, 3).unwrap(), 0.0);
        let near_one = impropriety_isotropic(20.0, 4).unwrap();
        assert!(1.0 - near_one < 1e-10);
        assert!(impropriety_isotropic(-0.1, 2).is_err());

        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for &r in &[0.1, 0.5, 1.0, 2.0] {
            for d in 1..=4 {
                let q = random_symmetric_unitary(&mut rng, d);
                let m = analytic_moments(&PolarForm::isotropic(r, q).unwrap(), 1.3).unwrap();
                let got = impropriety(&m).unwrap();
                assert!((got - impropriety_isotropic(r, d).unwrap()).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn two_mode_impropriety_matches_closed_form() {
        for &r in &[0.2, 0.8, 1.5] {
            let spec = symmetric_two_mode_squeezing(r, 0.4).unwrap();
            let m = analytic_moments(&spec.polar().unwrap(), 0.5).unwrap();
            let expect = (2.0 * r).tanh().powi(4);
            assert!((impropriety(&m).unwrap() - expect).abs() < 1e-12);
        }
    }

    #[test]
    fn singlet_impropriety() {
        let r = 1.0;
        let spec = two_photon_squeezing(BELL_SINGLET_ALPHA, r).unwrap();
        let m = analytic_moments(&spec.polar().unwrap(), 0.5).unwrap();
        let expect = (2.0f64.sqrt() * r).tanh().powi(8);
        assert!((impropriety(&m).unwrap() - expect).abs() < 1e-12);
    }

    #[test]
    fn identical_rows() {
        let v = [Complex64::new(1.0, 2.0), Complex64::new(-0.5, 0.25)];
        let rows: Vec<Complex64> = (0..5).flat_map(|_| v).collect();
        let batch = SampleBatch::from_rows(2, rows, 0, 0.5).unwrap();
        let m = empirical_moments(&batch).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!((m.gamma[(i, j)] - v[i] * v[j].conj()).norm() < 1e-14);
                assert!((m.c[(i, j)] - v[i] * v[j]).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn empirical_rejects_tiny_batch() {
        let batch = SampleBatch::from_rows(2, vec![Complex64::new(1.0, 0.0); 2], 0, 0.5).unwrap();
        assert!(empirical_moments(&batch).is_err());
    }

    #[test]
    fn monte_carlo_matches_analytic() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let xi = random_symmetric(&mut rng, 3, 1.0);
        let polar = polar_decompose(&xi).unwrap();
        let n = 1 << 18;
        let b = bogoliubov_transform(&sample_vacuum(3, n, 0.5, 3).unwrap(), &polar).unwrap();
        let emp = empirical_moments(&b).unwrap();
        let ana = analytic_moments(&polar, 0.5).unwrap();
        let band = 5.0 / (n as f64).sqrt();
        for i in 0..3 {
            for j in 0..3 {
                let scale = (3.0 * ana.gamma[(i, i)].re * ana.gamma[(j, j)].re).sqrt();
                assert!((emp.gamma[(i, j)] - ana.gamma[(i, j)]).norm() < band * scale);
                assert!((emp.c[(i, j)] - ana.c[(i, j)]).norm() < band * scale);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn analytic_moment_invariants(seed in any::<u64>(), d in 1usize..=6, norm in 0.0f64..2.0, sigma2 in 0.5f64..2.0) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let xi = random_symmetric(&mut rng, d, norm);
            let polar = polar_decompose(&xi).unwrap();
            let m = analytic_moments(&polar, sigma2).unwrap();
            let i = impropriety(&m).unwrap();
            prop_assert!((0.0..=1.0).contains(&i));
            prop_assert!(m.c.symmetry_defect() <= 1e-9 * (1.0 + m.c.frobenius_norm()));
            let lowest = *eig_hermitian(&m.gamma).unwrap().values.last().unwrap();
            prop_assert!(lowest >= sigma2 - 1e-9);
        }

        #[test]
        fn isotropic_is_monotone(r in 0.001f64..4.9, dr in 0.001f64..0.1, d in 1usize..=4) {
            prop_assert!(impropriety_isotropic(r + dr, d).unwrap() > impropriety_isotropic(r, d).unwrap());
        }
    }
}
