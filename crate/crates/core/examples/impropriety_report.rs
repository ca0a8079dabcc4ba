//! Writes a squeezing matrix file and prints its impropriety report, the same
//! output as `squeezelab impropriety --xi-file`.

use squeezelab::experiment::report_impropriety;
use squeezelab::model::{symmetric_two_mode_squeezing, two_photon_squeezing, BELL_SINGLET_ALPHA};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir();
    let singlet = dir.join("singlet_xi.json");
    two_photon_squeezing(BELL_SINGLET_ALPHA, 1.0)?.save(&singlet)?;
    print!("{}", report_impropriety(&singlet, 0.5)?);

    println!();
    let two_mode = dir.join("two_mode_xi.json");
    symmetric_two_mode_squeezing(0.2, 0.0)?.save(&two_mode)?;
    print!("{}", report_impropriety(&two_mode, 0.5)?);
    Ok(())
}
