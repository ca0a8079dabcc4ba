//! Squeezes sampled vacuum noise and compares sample moments with the
//! analytic covariance and pseudo-covariance.

use squeezelab::experiment::moment_deviation;
use squeezelab::model::{
    analytic_moments, bogoliubov_transform, empirical_moments, sample_vacuum,
    symmetric_two_mode_squeezing,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 1 << 20;
    let spec = symmetric_two_mode_squeezing(0.8, 0.3)?;
    let polar = spec.polar()?;
    let a = sample_vacuum(2, n, 0.5, 2024)?;
    let b = bogoliubov_transform(&a, &polar)?;

    let emp = empirical_moments(&b)?;
    let ana = analytic_moments(&polar, 0.5)?;
    println!("analytic Gamma =\n{}", ana.gamma);
    println!("sample Gamma =\n{}", emp.gamma);
    println!("analytic C =\n{}", ana.c);
    println!("sample C =\n{}", emp.c);
    println!(
        "worst deviation: {:.2} (units of sqrt(3 Gamma_ii Gamma_jj / n))",
        moment_deviation(&emp, &ana, n)
    );
    Ok(())
}
