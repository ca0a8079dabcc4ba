//! Seeded random streams.
//!
//! Every stochastic quantity in the crate is drawn from ChaCha8 keyed by a
//! 64-bit seed. The 32-byte key is the little-endian concatenation of four
//! successive SplitMix64 outputs started at the seed, and independent
//! substreams are selected with ChaCha's 64-bit stream id (one per sample
//! chunk). Standard complex normals come from the polar Box-Muller map
//!
//! ```text
//! z = sqrt(-ln u1) * (cos 2 pi u2 + i sin 2 pi u2),  u1 in (0, 1], u2 in [0, 1)
//! ```
//!
//! so `E[|z|^2] = 1` and `E[z^2] = 0`. Transcendentals use the pure-Rust
//! `libm` port so the bit pattern of every sample is platform independent.

use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 output function (Steele, Lea & Flood).
#[inline]
pub fn splitmix64_mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives a child seed from `base` and an index; distinct indices give
/// unrelated seeds, and the mapping for one index never depends on others.
///
/// `derive_seed(base, i) = mix(base + GOLDEN_GAMMA * (i + 1))`.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    splitmix64_mix(base.wrapping_add(GOLDEN_GAMMA.wrapping_mul(index.wrapping_add(1))))
}

fn expand_key(seed: u64) -> [u8; 32] {
    let mut key = [0u8; 32];
    let mut state = seed;
    for chunk in key.chunks_exact_mut(8) {
        state = state.wrapping_add(GOLDEN_GAMMA);
        chunk.copy_from_slice(&splitmix64_mix(state).to_le_bytes());
    }
    key
}

/// ChaCha8 generator for `(seed, stream)`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::from_seed(expand_key(seed));
    rng.set_stream(stream);
    rng
}

/// Uniform in `[0, 1)` with 53 random bits.
#[inline]
pub fn uniform(rng: &mut impl RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Standard complex Gaussian: independent real and imaginary parts, each with
/// variance 1/2.
#[inline]
pub fn standard_complex_normal(rng: &mut impl RngCore) -> Complex64 {
    let u1 = ((rng.next_u64() >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64);
    let u2 = uniform(rng);
    let radius = libm::sqrt(-libm::log(u1));
    let theta = std::f64::consts::TAU * u2;
    Complex64::new(radius * libm::cos(theta), radius * libm::sin(theta))
}
