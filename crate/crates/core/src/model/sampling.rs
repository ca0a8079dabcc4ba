use num_complex::Complex64;
use rayon::prelude::*;

use super::{check_sigma2, ModelError};
use crate::linalg::{hermitian_matrix_function, ComplexMatrix, PolarForm, SpectralFn};
use crate::rng::{standard_complex_normal, stream_rng};

/// Rows per RNG substream. Chunk `k` of a batch is always drawn from stream
/// `k`, so the batch does not depend on how chunks are scheduled.
pub const CHUNK_ROWS: usize = 4096;

/// `n` realizations of a `d`-mode complex amplitude vector, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleBatch {
    n: usize,
    d: usize,
    amplitudes: Vec<Complex64>,
    seed: u64,
    sigma2: f64,
}

impl SampleBatch {
    /// Wraps existing amplitudes (row-major, `n * d` entries).
    pub fn from_rows(
        d: usize,
        amplitudes: Vec<Complex64>,
        seed: u64,
        sigma2: f64,
    ) -> Result<Self, ModelError> {
        if d == 0 || !amplitudes.len().is_multiple_of(d) {
            return Err(ModelError::InvalidArgument(format!(
                "{} amplitudes do not form rows of {d} modes",
                amplitudes.len()
            )));
        }
        if amplitudes.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(ModelError::InvalidArgument("non-finite amplitude".into()));
        }
        Ok(Self {
            n: amplitudes.len() / d,
            d,
            amplitudes,
            seed,
            sigma2,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn sigma2(&self) -> f64 {
        self.sigma2
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.amplitudes[i * self.d..(i + 1) * self.d]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Complex64]> {
        self.amplitudes.chunks_exact(self.d)
    }
}

fn validate_sizes(d: usize, n: usize) -> Result<(), ModelError> {
    if d == 0 || n == 0 {
        return Err(ModelError::InvalidArgument(format!(
            "mode count and realization count must be >= 1, got d = {d}, n = {n}"
        )));
    }
    Ok(())
}

/// Fills `out` (whole rows of `d` modes) with chunk `chunk` of the vacuum
/// stream for `seed`. `out` must hold at most `CHUNK_ROWS` rows.
pub fn sample_vacuum_chunk(out: &mut [Complex64], sigma: f64, seed: u64, chunk: u64) {
    let mut rng = stream_rng(seed, chunk);
    for z in out.iter_mut() {
        *z = standard_complex_normal(&mut rng) * sigma;
    }
}

/// Vacuum (or thermal, for `sigma2 > 1/2`) amplitudes `a = sigma z` with `z`
/// standard complex Gaussian. Bit-identical for a fixed `(d, n, sigma2, seed)`
/// regardless of the rayon pool size.
pub fn sample_vacuum(d: usize, n: usize, sigma2: f64, seed: u64) -> Result<SampleBatch, ModelError> {
    validate_sizes(d, n)?;
    check_sigma2(sigma2)?;
    let sigma = sigma2.sqrt();
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); n * d];
    amplitudes
        .par_chunks_mut(CHUNK_ROWS * d)
        .enumerate()
        .for_each(|(k, chunk)| sample_vacuum_chunk(chunk, sigma, seed, k as u64));
    Ok(SampleBatch {
        n,
        d,
        amplitudes,
        seed,
        sigma2,
    })
}

/// Precomputed `cosh(R)` and `sinh(R) Q` for repeated row transforms.
#[derive(Debug, Clone)]
pub struct BogoliubovMap {
    cosh_r: ComplexMatrix,
    sinh_r_q: ComplexMatrix,
}

impl BogoliubovMap {
    pub fn new(polar: &PolarForm) -> Result<Self, ModelError> {
        let cosh_r = hermitian_matrix_function(&polar.r_part, SpectralFn::Cosh)?;
        let sinh_r = hermitian_matrix_function(&polar.r_part, SpectralFn::Sinh)?;
        Ok(Self {
            cosh_r,
            sinh_r_q: sinh_r.matmul(&polar.q_part),
        })
    }

    pub fn dim(&self) -> usize {
        self.cosh_r.rows()
    }

    /// `out = cosh(R) a + sinh(R) Q conj(a)` for one row.
    #[inline]
    pub fn apply_row(&self, a: &[Complex64], out: &mut [Complex64]) {
        let d = self.dim();
        for (i, o) in out.iter_mut().enumerate().take(d) {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..d {
                acc += self.cosh_r[(i, j)] * a[j] + self.sinh_r_q[(i, j)] * a[j].conj();
            }
            *o = acc;
        }
    }

    /// Transforms whole rows in place.
    pub fn apply_in_place(&self, rows: &mut [Complex64]) {
        let d = self.dim();
        let mut scratch = vec![Complex64::new(0.0, 0.0); d];
        for row in rows.chunks_exact_mut(d) {
            self.apply_row(row, &mut scratch);
            row.copy_from_slice(&scratch);
        }
    }
}

/// Classical Bogoliubov transform of every realization in `a`.
pub fn bogoliubov_transform(a: &SampleBatch, polar: &PolarForm) -> Result<SampleBatch, ModelError> {
    if a.d != polar.dim() {
        return Err(ModelError::DimensionMismatch {
            expected: polar.dim(),
            got: a.d,
        });
    }
    let map = BogoliubovMap::new(polar)?;
    let mut amplitudes = a.amplitudes.clone();
    amplitudes
        .par_chunks_mut(CHUNK_ROWS * a.d)
        .for_each(|chunk| map.apply_in_place(chunk));
    Ok(SampleBatch {
        n: a.n,
        d: a.d,
        amplitudes,
        seed: a.seed,
        sigma2: a.sigma2,
    })
}
