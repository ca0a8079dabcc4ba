use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::ModelError;
use crate::linalg::{polar_decompose, ComplexMatrix, PolarForm, HERMITIAN_TOL};

/// Mode indices of the two-photon polarization layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    AliceH = 0,
    AliceV = 1,
    BobH = 2,
    BobV = 3,
}

/// Amplitudes of `|HV> - |VH>` (normalized).
pub const BELL_SINGLET_ALPHA: [Complex64; 4] = [
    Complex64::new(0.0, 0.0),
    Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0),
    Complex64::new(-std::f64::consts::FRAC_1_SQRT_2, 0.0),
    Complex64::new(0.0, 0.0),
];

/// Uniform product superposition, all amplitudes 1/2.
pub const SEPARABLE_UNIFORM_ALPHA: [Complex64; 4] = [Complex64::new(0.5, 0.0); 4];

/// Complex symmetric squeezing matrix.
#[derive(Debug, Clone)]
pub struct SqueezingSpec {
    xi: ComplexMatrix,
}

impl SqueezingSpec {
    pub fn new(xi: ComplexMatrix) -> Result<Self, ModelError> {
        if !xi.is_square() {
            return Err(ModelError::InvalidArgument(format!(
                "squeezing matrix must be square, got {}x{}",
                xi.rows(),
                xi.cols()
            )));
        }
        if xi.rows() == 0 {
            return Err(ModelError::InvalidArgument("squeezing matrix is empty".into()));
        }
        if !xi.is_finite() {
            return Err(ModelError::InvalidArgument("squeezing matrix has non-finite entries".into()));
        }
        if !xi.is_symmetric(HERMITIAN_TOL) {
            return Err(ModelError::Linalg(crate::linalg::LinalgError::NotSymmetric(
                xi.symmetry_defect(),
            )));
        }
        Ok(Self { xi })
    }

    pub fn xi(&self) -> &ComplexMatrix {
        &self.xi
    }

    pub fn dim(&self) -> usize {
        self.xi.rows()
    }

    pub fn polar(&self) -> Result<PolarForm, ModelError> {
        Ok(polar_decompose(&self.xi)?)
    }

    pub fn to_document(&self) -> XiDocument {
        XiDocument {
            d: self.dim(),
            entries: self.xi.as_slice().iter().map(|z| [z.re, z.im]).collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self, ModelError> {
        let doc: XiDocument =
            serde_json::from_str(text).map_err(|e| ModelError::Parse(e.to_string()))?;
        doc.into_spec()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("plain data serializes")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, ModelError> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), ModelError> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }
}

/// On-disk squeezing matrix: `{ "d": 2, "entries": [[re, im], ...] }`,
/// entries in row-major order.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct XiDocument {
    pub d: usize,
    pub entries: Vec<[f64; 2]>,
}

impl XiDocument {
    pub fn into_spec(self) -> Result<SqueezingSpec, ModelError> {
        if self.entries.len() != self.d * self.d {
            return Err(ModelError::Parse(format!(
                "d = {} needs {} entries, found {}",
                self.d,
                self.d * self.d,
                self.entries.len()
            )));
        }
        let data = self
            .entries
            .into_iter()
            .map(|[re, im]| Complex64::new(re, im))
            .collect();
        let xi = ComplexMatrix::from_row_major(self.d, self.d, data)
            .map_err(|e| ModelError::Parse(e.to_string()))?;
        SqueezingSpec::new(xi)
    }
}

/// Two-photon polarization squeezing matrix in mode order (AH, AV, BH, BV):
///
/// ```text
///         [ 0   0   a1  a2 ]
/// xi = r  [ 0   0   a3  a4 ]
///         [ a1  a3  0   0  ]
///         [ a2  a4  0   0  ]
/// ```
///
/// `alpha` is renormalized to unit length.
pub fn two_photon_squeezing(alpha: [Complex64; 4], r: f64) -> Result<SqueezingSpec, ModelError> {
    if !(r.is_finite() && r >= 0.0) {
        return Err(ModelError::InvalidArgument(format!("r must be >= 0, got {r}")));
    }
    let norm = alpha.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if !norm.is_finite() || norm == 0.0 {
        return Err(ModelError::InvalidArgument("alpha must be a non-zero finite vector".into()));
    }
    let [a1, a2, a3, a4] = alpha.map(|z| z * (r / norm));
    let mut xi = ComplexMatrix::zeros(4, 4);
    xi[(0, 2)] = a1;
    xi[(0, 3)] = a2;
    xi[(1, 2)] = a3;
    xi[(1, 3)] = a4;
    xi[(2, 0)] = a1;
    xi[(2, 1)] = a3;
    xi[(3, 0)] = a2;
    xi[(3, 1)] = a4;
    SqueezingSpec::new(xi)
}

/// `xi = r e^{i phi} [[0, 1], [1, 0]]`.
pub fn symmetric_two_mode_squeezing(r: f64, phi: f64) -> Result<SqueezingSpec, ModelError> {
    if !(r.is_finite() && r >= 0.0) {
        return Err(ModelError::InvalidArgument(format!("r must be >= 0, got {r}")));
    }
    let z = Complex64::from_polar(r, phi);
    let mut xi = ComplexMatrix::zeros(2, 2);
    xi[(0, 1)] = z;
    xi[(1, 0)] = z;
    SqueezingSpec::new(xi)
}
