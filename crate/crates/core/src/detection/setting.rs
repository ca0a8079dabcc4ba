use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_8};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use super::DetectionError;
use crate::linalg::ComplexMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SettingLabel {
    A1,
    A2,
    B1,
    B2,
}

impl SettingLabel {
    pub const ALL: [SettingLabel; 4] = [Self::A1, Self::A2, Self::B1, Self::B2];

    /// Two-level observable measured by this setting:
    /// `A1 = Z`, `A2 = X`, `B1 = (Z + X)/sqrt 2`, `B2 = (Z - X)/sqrt 2`.
    pub fn observable(self) -> ComplexMatrix {
        let s = FRAC_1_SQRT_2;
        match self {
            SettingLabel::A1 => ComplexMatrix::from_real_rows(&[&[1.0, 0.0], &[0.0, -1.0]]),
            SettingLabel::A2 => ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]),
            SettingLabel::B1 => ComplexMatrix::from_real_rows(&[&[s, s], &[s, -s]]),
            SettingLabel::B2 => ComplexMatrix::from_real_rows(&[&[s, -s], &[-s, -s]]),
        }
    }
}

impl fmt::Display for SettingLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SettingLabel::A1 => "A1",
            SettingLabel::A2 => "A2",
            SettingLabel::B1 => "B1",
            SettingLabel::B2 => "B2",
        };
        f.write_str(s)
    }
}

impl FromStr for SettingLabel {
    type Err = DetectionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A1" => Ok(SettingLabel::A1),
            "A2" => Ok(SettingLabel::A2),
            "B1" => Ok(SettingLabel::B1),
            "B2" => Ok(SettingLabel::B2),
            _ => Err(DetectionError::UnknownSetting(s.to_string())),
        }
    }
}

/// A measurement choice: the pair `(b_H, b_V)` is mapped to `U^H (b_H, b_V)`
/// before thresholding, where `U^H O U = Z` for the setting's observable `O`.
#[derive(Debug, Clone)]
pub struct MeasurementSetting {
    pub label: SettingLabel,
    pub rotation: ComplexMatrix,
    /// `U^H` as a plain array for the per-row hot loop.
    adjoint: [[Complex64; 2]; 2],
}

impl MeasurementSetting {
    pub fn new(label: SettingLabel, rotation: ComplexMatrix) -> Result<Self, DetectionError> {
        if rotation.rows() != 2 || rotation.cols() != 2 {
            return Err(DetectionError::InvalidRotation("rotation must be 2x2".into()));
        }
        let defect = rotation.unitarity_defect();
        if defect > 1e-10 {
            return Err(DetectionError::InvalidRotation(format!(
                "rotation is not unitary (defect {defect:.3e})"
            )));
        }
        let adj = rotation.adjoint();
        let adjoint = [[adj[(0, 0)], adj[(0, 1)]], [adj[(1, 0)], adj[(1, 1)]]];
        Ok(Self {
            label,
            rotation,
            adjoint,
        })
    }

    /// `U^H (h, v)`.
    #[inline]
    pub fn rotate(&self, h: Complex64, v: Complex64) -> (Complex64, Complex64) {
        let m = &self.adjoint;
        (m[0][0] * h + m[0][1] * v, m[1][0] * h + m[1][1] * v)
    }
}

/// Standard rotation for each setting: `A1 -> I`, `A2 -> H`
/// (`(1/sqrt 2)[[1, 1], [1, -1]]`), `B1 -> U+`, `B2 -> U-` with
/// `U+- = [[cos pi/8, +-sin pi/8], [+-sin pi/8, -cos pi/8]]`.
pub fn setting_rotation(label: SettingLabel) -> MeasurementSetting {
    let (c, s) = (FRAC_PI_8.cos(), FRAC_PI_8.sin());
    let h = FRAC_1_SQRT_2;
    let rotation = match label {
        SettingLabel::A1 => ComplexMatrix::identity(2),
        SettingLabel::A2 => ComplexMatrix::from_real_rows(&[&[h, h], &[h, -h]]),
        SettingLabel::B1 => ComplexMatrix::from_real_rows(&[&[c, s], &[s, -c]]),
        SettingLabel::B2 => ComplexMatrix::from_real_rows(&[&[c, -s], &[-s, -c]]),
    };
    MeasurementSetting::new(label, rotation).expect("standard rotations are unitary")
}
