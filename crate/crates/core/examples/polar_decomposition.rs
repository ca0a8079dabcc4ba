//! Polar form of a random complex symmetric squeezing matrix.

use squeezelab::linalg::random::random_symmetric;
use squeezelab::linalg::{polar_decompose, svd};
use squeezelab::rng::stream_rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = stream_rng(7, 0);
    let xi = random_symmetric(&mut rng, 3, 1.2);
    println!("xi =\n{xi}");

    let polar = polar_decompose(&xi)?;
    println!("R =\n{}", polar.r_part);
    println!("Q =\n{}", polar.q_part);
    println!("singular values: {:?}", svd(&xi)?.d);
    println!("|RQ - xi|       = {:.3e}", polar.reconstruct().distance(&xi));
    println!("|Q^H Q - I|     = {:.3e}", polar.q_part.unitarity_defect());
    println!("|R - R^H|       = {:.3e}", polar.r_part.hermitian_defect());
    Ok(())
}
