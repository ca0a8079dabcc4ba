//! Entanglement threshold of two-mode squeezing for vacuum and thermal input.

use squeezelab::model::separability_threshold;

fn main() {
    for sigma2 in [0.5, 0.75, 1.0, 2.0] {
        let t = separability_threshold(sigma2, 0.0).threshold_r;
        print!("sigma2 = {sigma2:<4}  threshold r = {t:.6}  ");
        for r in [0.1, 0.3, 0.6] {
            let v = separability_threshold(sigma2, r);
            print!(" r={r}: {}", if v.entangled { "entangled" } else { "separable" });
        }
        println!();
    }
}
