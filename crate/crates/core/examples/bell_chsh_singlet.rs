//! One CHSH run on the singlet-like two-photon state.
//!
//! Usage: `cargo run --release --example bell_chsh_singlet -- [r] [samples]`

use squeezelab::detection::{run_chsh, SETTING_PAIRS, TSIRELSON_BOUND};
use squeezelab::model::{two_photon_squeezing, BELL_SINGLET_ALPHA};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let r: f64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(1.0);
    let n: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(1 << 20);

    let spec = two_photon_squeezing(BELL_SINGLET_ALPHA, r)?;
    let res = run_chsh(&spec, 0.5, 1.0, n, 42)?;
    for (k, (a, b)) in SETTING_PAIRS.iter().enumerate() {
        let c = &res.counts[k];
        println!(
            "{a}{b}: hh {:>7} hv {:>7} vh {:>7} vv {:>7}  C = {:+.4} +- {:.4}",
            c.n_hh,
            c.n_hv,
            c.n_vh,
            c.n_vv,
            res.correlations[k].unwrap_or(f64::NAN),
            res.stderrs[k].unwrap_or(f64::NAN)
        );
    }
    if let (Some(s), Some(e)) = (res.s, res.s_stderr) {
        println!("S = {s:.4} +- {e:.4}  (2 sqrt 2 = {TSIRELSON_BOUND:.4})");
    }
    if let Some(eta) = res.eta {
        println!("efficiency ({}) = {eta:.4}", res.efficiency_rule);
    }
    Ok(())
}
