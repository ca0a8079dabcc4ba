/// Peres-Horodecki verdict for the symmetric two-mode state
/// `xi = r e^{i phi} [[0, 1], [1, 0]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparabilityVerdict {
    /// `sigma2 e^{-2r} < 1/2`.
    pub entangled: bool,
    /// `max(0, log(2 sigma2) / 2)`: the state is entangled for `r` above this.
    pub threshold_r: f64,
}

pub fn separability_threshold(sigma2: f64, r: f64) -> SeparabilityVerdict {
    SeparabilityVerdict {
        entangled: sigma2 * (-2.0 * r).exp() < 0.5,
        threshold_r: (0.5 * (2.0 * sigma2).ln()).max(0.0),
    }
}
