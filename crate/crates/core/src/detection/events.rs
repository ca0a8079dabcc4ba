use std::ops::{Add, AddAssign};

use num_complex::Complex64;
use rayon::prelude::*;

use super::{DetectionError, MeasurementSetting};
use crate::model::{SampleBatch, CHUNK_ROWS};

/// Result of thresholding the two channels on one side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SideOutcome {
    /// Only the H channel fired.
    Plus,
    /// Only the V channel fired.
    Minus,
    None,
    /// Both fired; excluded from coincidences and singles.
    Double,
}

impl SideOutcome {
    #[inline]
    pub fn from_clicks(h: bool, v: bool) -> Self {
        match (h, v) {
            (true, false) => SideOutcome::Plus,
            (false, true) => SideOutcome::Minus,
            (false, false) => SideOutcome::None,
            (true, true) => SideOutcome::Double,
        }
    }

    pub fn is_single(self) -> bool {
        matches!(self, SideOutcome::Plus | SideOutcome::Minus)
    }
}

#[inline]
fn clicks(amplitude: Complex64, gamma_sq: f64) -> bool {
    amplitude.norm_sqr() > gamma_sq
}

/// Amplitude-threshold detection of `(b_H, b_V)`: a channel fires when
/// `|b| > gamma` (strict).
pub fn threshold_detect(pair: [Complex64; 2], gamma: f64) -> SideOutcome {
    let g2 = gamma * gamma;
    SideOutcome::from_clicks(clicks(pair[0], g2), clicks(pair[1], g2))
}

/// Post-selection tallies for one setting pair.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EventCounts {
    pub n_hh: u64,
    pub n_hv: u64,
    pub n_vh: u64,
    pub n_vv: u64,
    /// Exclusive single detections on Alice's side, whatever Bob saw.
    pub n_single_a: u64,
    pub n_single_b: u64,
    /// Any-click counts per detector after rotation, in mode order
    /// (AH, AV, BH, BV); double detections count on both channels.
    pub clicks: [u64; 4],
    pub n_total: u64,
}

impl EventCounts {
    pub fn coincidences(&self) -> u64 {
        self.n_hh + self.n_hv + self.n_vh + self.n_vv
    }

    /// Exclusive coincidences in which the given detector (mode order
    /// AH, AV, BH, BV) is the one that fired on its side.
    pub fn coincidences_on(&self, detector: usize) -> u64 {
        match detector {
            0 => self.n_hh + self.n_hv,
            1 => self.n_vh + self.n_vv,
            2 => self.n_hh + self.n_vh,
            3 => self.n_hv + self.n_vv,
            _ => panic!("detector index {detector} out of range"),
        }
    }

    #[inline]
    pub fn record(&mut self, alice: SideOutcome, bob: SideOutcome) {
        use SideOutcome::{Minus, Plus};
        self.n_total += 1;
        if alice.is_single() {
            self.n_single_a += 1;
        }
        if bob.is_single() {
            self.n_single_b += 1;
        }
        match (alice, bob) {
            (Plus, Plus) => self.n_hh += 1,
            (Plus, Minus) => self.n_hv += 1,
            (Minus, Plus) => self.n_vh += 1,
            (Minus, Minus) => self.n_vv += 1,
            _ => {}
        }
    }
}

impl Add for EventCounts {
    type Output = EventCounts;

    fn add(mut self, rhs: EventCounts) -> EventCounts {
        self += rhs;
        self
    }
}

impl AddAssign for EventCounts {
    fn add_assign(&mut self, rhs: EventCounts) {
        self.n_hh += rhs.n_hh;
        self.n_hv += rhs.n_hv;
        self.n_vh += rhs.n_vh;
        self.n_vv += rhs.n_vv;
        self.n_single_a += rhs.n_single_a;
        self.n_single_b += rhs.n_single_b;
        for (a, b) in self.clicks.iter_mut().zip(rhs.clicks) {
            *a += b;
        }
        self.n_total += rhs.n_total;
    }
}

/// Rotates both sides of one `(AH, AV, BH, BV)` row and tallies it.
#[inline]
pub(crate) fn classify_row(
    row: &[Complex64],
    setting_a: &MeasurementSetting,
    setting_b: &MeasurementSetting,
    gamma_sq: f64,
    counts: &mut EventCounts,
) {
    let (ah, av) = setting_a.rotate(row[0], row[1]);
    let (bh, bv) = setting_b.rotate(row[2], row[3]);
    let fired = [
        clicks(ah, gamma_sq),
        clicks(av, gamma_sq),
        clicks(bh, gamma_sq),
        clicks(bv, gamma_sq),
    ];
    for (c, f) in counts.clicks.iter_mut().zip(fired) {
        *c += f as u64;
    }
    counts.record(
        SideOutcome::from_clicks(fired[0], fired[1]),
        SideOutcome::from_clicks(fired[2], fired[3]),
    );
}

/// Tallies exclusive coincidences for one setting pair over a four-mode batch
/// in mode order (AH, AV, BH, BV).
pub fn classify_events(
    b: &SampleBatch,
    setting_a: &MeasurementSetting,
    setting_b: &MeasurementSetting,
    gamma: f64,
) -> Result<EventCounts, DetectionError> {
    if b.d() != 4 {
        return Err(DetectionError::WrongModeCount(b.d()));
    }
    check_gamma(gamma)?;
    let g2 = gamma * gamma;
    Ok(b
        .amplitudes()
        .par_chunks(CHUNK_ROWS * 4)
        .map(|chunk| {
            let mut counts = EventCounts::default();
            for row in chunk.chunks_exact(4) {
                classify_row(row, setting_a, setting_b, g2, &mut counts);
            }
            counts
        })
        .reduce(EventCounts::default, |a, b| a + b))
}

pub(crate) fn check_gamma(gamma: f64) -> Result<(), DetectionError> {
    if gamma.is_finite() && gamma >= 0.0 {
        Ok(())
    } else {
        Err(DetectionError::InvalidArgument(format!(
            "threshold must be finite and >= 0, got {gamma}"
        )))
    }
}
