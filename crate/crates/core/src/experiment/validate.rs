use std::fmt;

use num_complex::Complex64;

use crate::detection::{setting_rotation, SettingLabel};
use crate::linalg::random::{random_hermitian_psd, random_symmetric, random_symmetric_unitary};
use crate::linalg::{hermitian_matrix_function, polar_decompose, ComplexMatrix, PolarForm, SpectralFn};
use crate::model::{
    analytic_moments, bogoliubov_transform, empirical_moments, impropriety, impropriety_isotropic,
    log_density, log_density_isotropic, sample_vacuum, separability_threshold, ModelError,
    StateMoments,
};
use crate::rng::{standard_complex_normal, stream_rng};

/// Realizations per random state in the moment check.
pub const VALIDATION_SAMPLES: usize = 1 << 16;
const SEED: u64 = 0x5eed_0fc0_ffee;

/// Signature of an analytic-moment implementation under test.
pub type MomentsFn = fn(&PolarForm, f64) -> Result<StateMoments, ModelError>;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        writeln!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

/// Largest elementwise deviation between empirical and analytic moments in
/// units of `sqrt(3 Gamma_ii Gamma_jj / n)`, over both `Gamma` and `C`.
pub fn moment_deviation(empirical: &StateMoments, analytic: &StateMoments, n: usize) -> f64 {
    let d = analytic.dim();
    let root_n = (n as f64).sqrt();
    let mut worst = 0.0f64;
    for i in 0..d {
        for j in 0..d {
            let scale = (3.0 * analytic.gamma[(i, i)].re * analytic.gamma[(j, j)].re).sqrt() / root_n;
            let dg = (empirical.gamma[(i, j)] - analytic.gamma[(i, j)]).norm();
            let dc = (empirical.c[(i, j)] - analytic.c[(i, j)]).norm();
            worst = worst.max(dg.max(dc) / scale);
        }
    }
    worst
}

type Outcome = Result<(bool, String), ModelError>;

fn run(name: &'static str, body: impl FnOnce() -> Outcome) -> CheckResult {
    match body() {
        Ok((passed, detail)) => CheckResult { name, passed, detail },
        Err(e) => CheckResult {
            name,
            passed: false,
            detail: format!("error: {e}"),
        },
    }
}

fn hyperbolic_identity() -> Outcome {
    let mut rng = stream_rng(SEED, 1);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let r = random_hermitian_psd(&mut rng, 4, 2.0);
        let ch = hermitian_matrix_function(&r, SpectralFn::Cosh)?;
        let sh = hermitian_matrix_function(&r, SpectralFn::Sinh)?;
        let ch2 = hermitian_matrix_function(&r, SpectralFn::CoshDouble)?;
        let c2 = ch.matmul(&ch);
        let s2 = sh.matmul(&sh);
        worst = worst.max((&c2 - &s2).distance(&ComplexMatrix::identity(4)));
        worst = worst.max((&c2 + &s2).distance(&ch2) / ch2.max_abs());
    }
    Ok((worst < 1e-9, format!("max defect {worst:.3e}")))
}

fn polar_reconstruction() -> Outcome {
    let mut rng = stream_rng(SEED, 2);
    let mut worst = 0.0f64;
    for k in 0..20 {
        let xi = random_symmetric(&mut rng, 1 + k % 4, 2.0);
        let p = polar_decompose(&xi)?;
        worst = worst
            .max(p.reconstruct().distance(&xi))
            .max(p.q_part.unitarity_defect())
            .max(p.r_part.hermitian_defect());
    }
    Ok((worst < 1e-9, format!("max defect {worst:.3e}")))
}

fn impropriety_closed_form(moments: MomentsFn) -> Outcome {
    let mut rng = stream_rng(SEED, 3);
    let mut worst = 0.0f64;
    for d in [1usize, 2, 4] {
        for r in [0.1, 0.5, 1.0, 2.0] {
            for sigma2 in [0.5, 1.0] {
                let q = random_symmetric_unitary(&mut rng, d);
                let m = moments(&PolarForm::isotropic(r, q)?, sigma2)?;
                worst = worst.max((impropriety(&m)? - impropriety_isotropic(r, d)?).abs());
            }
        }
    }
    Ok((worst < 1e-9, format!("max |I - tanh(2r)^(2d)| = {worst:.3e}")))
}

fn density_closed_form(moments: MomentsFn) -> Outcome {
    let mut rng = stream_rng(SEED, 4);
    let mut worst = 0.0f64;
    for r in [0.3, 1.0] {
        let q = random_symmetric_unitary(&mut rng, 3);
        let m = moments(&PolarForm::isotropic(r, q.clone())?, 0.5)?;
        for _ in 0..50 {
            let beta: Vec<Complex64> = (0..3).map(|_| standard_complex_normal(&mut rng)).collect();
            let a = log_density(&beta, &m)?;
            let b = log_density_isotropic(&beta, r, &q, 0.5)?;
            worst = worst.max((a - b).abs());
        }
    }
    Ok((worst < 1e-9, format!("max |difference| = {worst:.3e}")))
}

fn moment_convergence(moments: MomentsFn) -> Outcome {
    let mut rng = stream_rng(SEED, 5);
    let mut worst = 0.0f64;
    for k in 0..8u64 {
        let xi = random_symmetric(&mut rng, 4, 1.5);
        let polar = polar_decompose(&xi)?;
        let a = sample_vacuum(4, VALIDATION_SAMPLES, 0.5, SEED ^ (k + 1))?;
        let emp = empirical_moments(&bogoliubov_transform(&a, &polar)?)?;
        let ana = moments(&polar, 0.5)?;
        worst = worst.max(moment_deviation(&emp, &ana, VALIDATION_SAMPLES));
    }
    Ok((worst < 5.0, format!("max deviation {worst:.2} (limit 5)")))
}

fn setting_rotations() -> Outcome {
    let z = SettingLabel::A1.observable();
    let mut worst = 0.0f64;
    for label in SettingLabel::ALL {
        let u = setting_rotation(label).rotation;
        worst = worst.max(u.adjoint().matmul(&label.observable()).matmul(&u).distance(&z));
    }
    Ok((worst < 1e-12, format!("max |U^H O U - Z| = {worst:.3e}")))
}

fn separability_boundary() -> Outcome {
    let mut ok = true;
    for sigma2 in [0.5f64, 0.75, 1.0, 2.0] {
        let t = 0.5 * (2.0 * sigma2).ln();
        ok &= !separability_threshold(sigma2, t - 1e-6).entangled;
        ok &= separability_threshold(sigma2, t + 1e-6).entangled;
    }
    Ok((ok, "verdict flips at r = log(2 sigma2) / 2".into()))
}

/// Runs the self-check suite with the built-in analytic moments.
pub fn validate() -> ValidationReport {
    validate_with(analytic_moments)
}

/// Runs the self-check suite with a substitute moment implementation.
pub fn validate_with(moments: MomentsFn) -> ValidationReport {
    ValidationReport {
        checks: vec![
            run("hyperbolic-identity", hyperbolic_identity),
            run("polar-reconstruction", polar_reconstruction),
            run("impropriety-closed-form", || impropriety_closed_form(moments)),
            run("density-closed-form", || density_closed_form(moments)),
            run("moment-convergence", || moment_convergence(moments)),
            run("setting-rotations", setting_rotations),
            run("separability-boundary", separability_boundary),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::hermitian_matrix_function as hmf;

    /// Analytic moments with the sign of the second pseudo-covariance term
    /// flipped.
    fn flipped_sign(polar: &PolarForm, sigma2: f64) -> Result<StateMoments, ModelError> {
        let r = &polar.r_part;
        let ch = hmf(r, SpectralFn::Cosh)?;
        let sh = hmf(r, SpectralFn::Sinh)?;
        let q = &polar.q_part;
        let first = ch.matmul(&q.transpose()).matmul(&sh.transpose());
        let second = sh.matmul(q).matmul(&ch.transpose());
        Ok(StateMoments {
            gamma: hmf(r, SpectralFn::CoshDouble)?.scale(sigma2),
            c: (&first - &second).scale(sigma2),
            sigma2,
        })
    }

    #[test]
    fn fresh_build_passes() {
        let report = validate();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn sign_mutation_is_caught() {
        let report = validate_with(flipped_sign);
        assert!(!report.passed());
        assert!(!report.check("moment-convergence").unwrap().passed, "{report}");
    }

    #[test]
    fn repeatable() {
        assert_eq!(validate(), validate());
    }
}
