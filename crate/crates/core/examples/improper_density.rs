//! Log-density of an improper Gaussian, augmented form versus the
//! isotropic closed form, plus a one-mode normalization check.

use squeezelab::linalg::random::random_symmetric_unitary;
use squeezelab::linalg::PolarForm;
use squeezelab::model::{analytic_moments, log_density, log_density_isotropic};
use squeezelab::rng::{standard_complex_normal, stream_rng};
use squeezelab::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = stream_rng(3, 0);
    let (r, sigma2) = (0.6, 0.5);
    let q = random_symmetric_unitary(&mut rng, 2);
    let moments = analytic_moments(&PolarForm::isotropic(r, q.clone())?, sigma2)?;
    for _ in 0..5 {
        let beta: Vec<Complex64> = (0..2).map(|_| standard_complex_normal(&mut rng)).collect();
        println!(
            "augmented {:>12.9} closed form {:>12.9}",
            log_density(&beta, &moments)?,
            log_density_isotropic(&beta, r, &q, sigma2)?
        );
    }

    // Midpoint rule over the complex plane for d = 1.
    let one = analytic_moments(&PolarForm::isotropic(r, squeezelab::linalg::ComplexMatrix::identity(1))?, sigma2)?;
    let (half, steps) = (8.0, 600);
    let h = 2.0 * half / steps as f64;
    let mut total = 0.0;
    for i in 0..steps {
        for j in 0..steps {
            let z = Complex64::new(-half + (i as f64 + 0.5) * h, -half + (j as f64 + 0.5) * h);
            total += log_density(&[z], &one)?.exp() * h * h;
        }
    }
    println!("integral of the d = 1 density: {total:.6}");
    Ok(())
}
