//! S and the coincidence efficiency versus squeezing, written as CSV and SVG.
//!
//! Usage: `cargo run --release --example squeezing_sweep -- [out_dir]`

use std::path::PathBuf;

use squeezelab::experiment::{emit_svg, run_sweep, write_csv, SweepConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    let config = SweepConfig {
        seed: 1,
        ..Default::default()
    };
    let rows = run_sweep(&config)?;
    write_csv(dir.join("sweep.csv"), &rows)?;
    emit_svg(&rows, dir.join("sweep.svg"))?;
    for row in &rows {
        println!(
            "r = {:.2}  S = {:.4}  eta = {:.4}",
            row.r,
            row.s.unwrap_or(f64::NAN),
            row.eta.unwrap_or(f64::NAN)
        );
    }
    println!("wrote {} and {}", dir.join("sweep.csv").display(), dir.join("sweep.svg").display());
    Ok(())
}
