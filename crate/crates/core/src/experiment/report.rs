use std::fmt;
use std::path::Path;

use num_complex::Complex64;

use super::ExperimentError;
use crate::linalg::{determinant, svd};
use crate::model::{
    analytic_moments, check_sigma2, impropriety, separability_threshold, SeparabilityVerdict,
    SqueezingSpec, StateMoments,
};

/// Separability verdict for a `d = 2` matrix of the form
/// `r e^{i phi} [[0, 1], [1, 0]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoModeVerdict {
    pub r: f64,
    pub phi: f64,
    pub verdict: SeparabilityVerdict,
}

#[derive(Debug, Clone)]
pub struct ImproprietyReport {
    pub d: usize,
    pub sigma2: f64,
    /// Singular values of `xi`, descending; also the eigenvalues of `R`.
    pub singular_values: Vec<f64>,
    /// Spectral norm of `R`.
    pub r_norm: f64,
    pub moments: StateMoments,
    pub det_gamma: Complex64,
    pub det_c: Complex64,
    pub impropriety: f64,
    pub two_mode: Option<TwoModeVerdict>,
}

fn two_mode_pattern(spec: &SqueezingSpec, sigma2: f64) -> Option<TwoModeVerdict> {
    let xi = spec.xi();
    if xi.rows() != 2 {
        return None;
    }
    let z = xi[(0, 1)];
    let tol = 1e-12 * (1.0 + z.norm());
    if xi[(0, 0)].norm() > tol || xi[(1, 1)].norm() > tol {
        return None;
    }
    Some(TwoModeVerdict {
        r: z.norm(),
        phi: z.arg(),
        verdict: separability_threshold(sigma2, z.norm()),
    })
}

pub fn impropriety_report(spec: &SqueezingSpec, sigma2: f64) -> Result<ImproprietyReport, ExperimentError> {
    check_sigma2(sigma2)?;
    let singular_values = svd(spec.xi()).map_err(crate::model::ModelError::from)?.d;
    let moments = analytic_moments(&spec.polar()?, sigma2)?;
    let det_gamma = determinant(&moments.gamma).map_err(crate::model::ModelError::from)?;
    let det_c = determinant(&moments.c).map_err(crate::model::ModelError::from)?;
    Ok(ImproprietyReport {
        d: spec.dim(),
        sigma2,
        r_norm: singular_values.first().copied().unwrap_or(0.0),
        singular_values,
        impropriety: impropriety(&moments)?,
        moments,
        det_gamma,
        det_c,
        two_mode: two_mode_pattern(spec, sigma2),
    })
}

/// Loads a squeezing matrix file and builds its report.
pub fn report_impropriety(xi_file: impl AsRef<Path>, sigma2: f64) -> Result<ImproprietyReport, ExperimentError> {
    let spec = SqueezingSpec::load(xi_file)?;
    impropriety_report(&spec, sigma2)
}

fn complex(z: Complex64) -> String {
    format!("{:+.9e}{:+.9e}i", z.re, z.im)
}

impl fmt::Display for ImproprietyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "d = {}", self.d)?;
        writeln!(f, "sigma2 = {}", self.sigma2)?;
        let sv: Vec<String> = self.singular_values.iter().map(|s| format!("{s:.12e}")).collect();
        writeln!(f, "singular values = [{}]", sv.join(", "))?;
        writeln!(f, "||R|| = {:.12e}", self.r_norm)?;
        writeln!(f, "Gamma =")?;
        write!(f, "{}", self.moments.gamma)?;
        writeln!(f, "C =")?;
        write!(f, "{}", self.moments.c)?;
        writeln!(f, "det Gamma = {}", complex(self.det_gamma))?;
        writeln!(f, "det C = {}", complex(self.det_c))?;
        writeln!(f, "impropriety = {:.15e}", self.impropriety)?;
        if let Some(t) = &self.two_mode {
            writeln!(
                f,
                "two-mode form: r = {:.12e}, phi = {:.12e}, threshold r = {:.12e}, verdict = {}",
                t.r,
                t.phi,
                t.verdict.threshold_r,
                if t.verdict.entangled { "entangled" } else { "separable" }
            )?;
        }
        Ok(())
    }
}
