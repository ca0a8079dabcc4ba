//! Impropriety of `R = r I` against `tanh(2r)^(2d)`, for random mode pairings.

use squeezelab::linalg::random::random_symmetric_unitary;
use squeezelab::linalg::PolarForm;
use squeezelab::model::{analytic_moments, impropriety, impropriety_isotropic};
use squeezelab::rng::stream_rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = stream_rng(1, 0);
    println!("{:>2} {:>5} {:>6} {:>22} {:>22}", "d", "r", "sigma2", "I(moments)", "tanh(2r)^(2d)");
    for d in [1, 2, 4] {
        for r in [0.1, 0.5, 1.0, 2.0] {
            for sigma2 in [0.5, 1.0] {
                let q = random_symmetric_unitary(&mut rng, d);
                let m = analytic_moments(&PolarForm::isotropic(r, q)?, sigma2)?;
                println!(
                    "{d:>2} {r:>5} {sigma2:>6} {:>22.15e} {:>22.15e}",
                    impropriety(&m)?,
                    impropriety_isotropic(r, d)?
                );
            }
        }
    }
    Ok(())
}
