use std::f64::consts::TAU;

use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::fourier::FourierPoly;
use crate::C64;

/// Samples of a function at `θₖ = 2πk/M`, `k = 0..M`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    samples: Vec<C64>,
}

/// Smallest power of two that is at least `n` (and at least 2).
pub fn next_grid_size(n: usize) -> usize {
    n.max(2).next_power_of_two()
}

impl GridFunction {
    pub fn new(samples: Vec<C64>) -> Result<Self> {
        let m = samples.len();
        if m < 2 || !m.is_power_of_two() {
            return Err(Error::GridNotPowerOfTwo(m));
        }
        Ok(GridFunction { samples })
    }

    pub fn from_real(samples: &[f64]) -> Result<Self> {
        Self::new(samples.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    /// Samples `f(θ)` on a grid of size `m`.
    pub fn from_fn(m: usize, f: impl Fn(f64) -> C64) -> Result<Self> {
        Self::new((0..m).map(|k| f(TAU * k as f64 / m as f64)).collect())
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[C64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<C64> {
        self.samples
    }

    pub fn angle(&self, k: usize) -> f64 {
        TAU * k as f64 / self.samples.len() as f64
    }

    /// Pointwise modulus as a new grid function.
    pub fn modulus(&self) -> GridFunction {
        GridFunction {
            samples: self.samples.iter().map(|s| C64::new(s.norm(), 0.0)).collect(),
        }
    }

    pub fn map(&self, f: impl Fn(C64) -> C64) -> GridFunction {
        GridFunction {
            samples: self.samples.iter().map(|&s| f(s)).collect(),
        }
    }

    pub fn mean(&self) -> C64 {
        self.samples.iter().sum::<C64>() / self.samples.len() as f64
    }

    pub fn mean_abs(&self) -> f64 {
        self.samples.iter().map(|s| s.norm()).sum::<f64>() / self.samples.len() as f64
    }

    pub fn max_abs(&self) -> f64 {
        self.samples.iter().map(|s| s.norm()).fold(0.0, f64::max)
    }

    pub fn rms(&self) -> f64 {
        (self.samples.iter().map(|s| s.norm_sqr()).sum::<f64>() / self.samples.len() as f64).sqrt()
    }

    /// Discrete Fourier coefficients `ĝ(n) = (1/M) Σₖ g(θₖ) e^{-inθₖ}` in FFT
    /// bin order (bin `n mod M`).
    pub fn dft_coefficients(&self) -> Vec<C64> {
        let m = self.samples.len();
        let mut buf = self.samples.clone();
        FftPlanner::new().plan_fft_forward(m).process(&mut buf);
        let scale = 1.0 / m as f64;
        buf.iter_mut().for_each(|c| *c *= scale);
        buf
    }

    /// Recovers the Laurent coefficients with indices in `lo..=hi`.
    pub fn to_poly(&self, lo: i64, hi: i64) -> Result<FourierPoly> {
        let m = self.samples.len();
        let width = (hi - lo).max(0) as usize;
        if m < 2 * width + 2 {
            return Err(Error::Aliasing {
                grid: m,
                width: width + 1,
            });
        }
        let bins = self.dft_coefficients();
        Ok(FourierPoly::from_coeffs(
            (lo..=hi).map(|n| (n, bins[n.rem_euclid(m as i64) as usize])),
        ))
    }
}

/// Evaluates a dense coefficient block on the grid by one inverse FFT; the
/// caller guarantees `coeffs.len() <= m`.
pub(crate) fn synthesize(lo: i64, coeffs: &[C64], m: usize) -> Vec<C64> {
    let mut buf = vec![C64::new(0.0, 0.0); m];
    for (j, &c) in coeffs.iter().enumerate() {
        let bin = (lo + j as i64).rem_euclid(m as i64) as usize;
        buf[bin] += c;
    }
    FftPlanner::new().plan_fft_inverse(m).process(&mut buf);
    buf
}
