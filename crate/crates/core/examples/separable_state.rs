//! The product-amplitude preset: rank-2 squeezing, singular pseudo-covariance,
//! zero impropriety, and no CHSH violation.

use squeezelab::experiment::{impropriety_report, run_sweep, StatePreset, SweepConfig};
use squeezelab::model::{two_photon_squeezing, SEPARABLE_UNIFORM_ALPHA};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = two_photon_squeezing(SEPARABLE_UNIFORM_ALPHA, 1.0)?;
    print!("{}", impropriety_report(&spec, 0.5)?);

    let rows = run_sweep(&SweepConfig {
        r_steps: 7,
        samples: 1 << 18,
        state: StatePreset::SeparableUniform,
        ..Default::default()
    })?;
    for row in rows {
        println!(
            "r = {:.1}  S = {:.4} +- {:.4}",
            row.r,
            row.s.unwrap_or(f64::NAN),
            row.s_stderr.unwrap_or(f64::NAN)
        );
    }
    Ok(())
}
