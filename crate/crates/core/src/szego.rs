//! Weighted least squares against the geometric mean of the weight.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fourier::{FourierPoly, GridFunction};
use crate::linalg::{hermitian_pinv_solve, symmetric_pinv_solve};
use crate::tolerance::DEFAULT_EQ_TOL;
use crate::C64;

/// Samples below this count as zeros of the weight.
pub const WEIGHT_FLOOR: f64 = 1e-12;

/// Relative eigenvalue cutoff for the normal equations.
pub const GRAM_CUTOFF: f64 = 1e-12;

/// Nonnegative weight sampled on the circle, with `w(θₖ) = w(−θₖ)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Weight {
    samples: Vec<f64>,
    floor: f64,
}

impl Weight {
    pub fn new(samples: Vec<f64>) -> Result<Self> {
        Self::with_tolerance(samples, DEFAULT_EQ_TOL)
    }

    /// `eq_tol` bounds the symmetry defect relative to `max(1, max w)`.
    pub fn with_tolerance(samples: Vec<f64>, eq_tol: f64) -> Result<Self> {
        let m = samples.len();
        if m < 4 || !m.is_power_of_two() {
            return Err(Error::GridNotPowerOfTwo(m));
        }
        if let Some((i, v)) = samples.iter().enumerate().find(|(_, v)| !(v.is_finite() && **v >= 0.0)) {
            return Err(Error::InvalidWeight(format!("sample {i} is {v}")));
        }
        let scale = samples.iter().copied().fold(1.0, f64::max);
        for k in 1..m {
            let gap = (samples[k] - samples[m - k]).abs();
            if gap > eq_tol * scale {
                return Err(Error::InvalidWeight(format!(
                    "not symmetric: samples {k} and {} differ by {gap:e}",
                    m - k
                )));
            }
        }
        Ok(Weight { samples, floor: WEIGHT_FLOOR })
    }

    pub fn from_fn(m: usize, w: impl Fn(f64) -> f64) -> Result<Self> {
        let step = std::f64::consts::TAU / m as f64;
        Self::new((0..m).map(|k| w(k as f64 * step)).collect())
    }

    pub fn constant(m: usize, c: f64) -> Result<Self> {
        Self::new(vec![c; m])
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn floor(&self) -> f64 {
        self.floor
    }

    /// `Wₙ = (1/M) Σₖ w(θₖ) e^{−inθₖ}` for `n = 0..=max`.
    fn moments(&self, max: usize) -> Vec<C64> {
        let g = GridFunction::from_real(&self.samples).expect("validated length");
        let bins = g.dft_coefficients();
        bins[..=max].to_vec()
    }
}

/// `exp` of the grid mean of `log w`.
///
/// A sample below the floor whose two neighbours are above it is read as an
/// integrable log singularity and takes the mean of the neighbours' logs.
/// Two adjacent samples below the floor mean the weight vanishes on an arc,
/// and the result is 0.
pub fn geometric_mean(w: &Weight) -> f64 {
    let s = w.samples();
    let m = s.len();
    let low = |k: usize| s[k] < w.floor;
    let Some(offset) = s.iter().find(|v| **v >= w.floor).map(|v| v.ln()) else {
        return 0.0;
    };
    // Logs are accumulated relative to `offset` to keep the sum small.
    let mut total = 0.0;
    for k in 0..m {
        if !low(k) {
            total += s[k].ln() - offset;
            continue;
        }
        let (prev, next) = ((k + m - 1) % m, (k + 1) % m);
        if low(prev) || low(next) {
            return 0.0;
        }
        total += 0.5 * (s[prev].ln() + s[next].ln()) - offset;
    }
    (offset + total / m as f64).exp()
}

/// Minimizer of the weighted grid quadrature of `|1 − f|²` over
/// `f = Σ_{k=1..N} cₖ zᵏ`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SzegoSolution<T> {
    pub infimum: f64,
    /// `c₁..c_N`.
    pub coefficients: Vec<T>,
}

impl SzegoSolution<f64> {
    pub fn polynomial(&self) -> FourierPoly {
        FourierPoly::from_real(1, &self.coefficients)
    }
}

impl SzegoSolution<C64> {
    pub fn polynomial(&self) -> FourierPoly {
        FourierPoly::from_dense(1, &self.coefficients)
    }
}

fn check_degree(w: &Weight, degree: usize) -> Result<()> {
    if degree == 0 {
        return Err(Error::InvalidInput("degree must be at least 1".into()));
    }
    let max = w.len() / 4;
    if degree > max {
        return Err(Error::DegreeTooLarge { degree, max });
    }
    Ok(())
}

/// Real-coefficient least squares: `G c = b` with `G_{jl} = Re W_{j−l}` and
/// `b_j = Re W_j`, solved by eigendecomposition with a relative cutoff.
pub fn szego_ls(w: &Weight, degree: usize) -> Result<SzegoSolution<f64>> {
    check_degree(w, degree)?;
    let mo = w.moments(degree);
    let g = DMatrix::from_fn(degree, degree, |j, l| mo[j.abs_diff(l)].re);
    let b = DVector::from_fn(degree, |j, _| mo[j + 1].re);
    let c = symmetric_pinv_solve(&g, &b, GRAM_CUTOFF);
    let value = mo[0].re - 2.0 * b.dot(&c) + c.dot(&(&g * &c));
    Ok(SzegoSolution { infimum: value.max(0.0), coefficients: c.iter().copied().collect() })
}

/// The same problem over complex coefficients: Hermitian Toeplitz system
/// `T_{lj} = W_{l−j}`, `b_l = W_l`.
pub fn szego_ls_complex(w: &Weight, degree: usize) -> Result<SzegoSolution<C64>> {
    check_degree(w, degree)?;
    let mo = w.moments(degree);
    let at = |n: isize| if n >= 0 { mo[n as usize] } else { mo[(-n) as usize].conj() };
    let t = DMatrix::from_fn(degree, degree, |l, j| at(l as isize - j as isize));
    let b = DVector::from_fn(degree, |l, _| mo[l + 1]);
    let c = hermitian_pinv_solve(&t, &b, GRAM_CUTOFF);
    let value = mo[0].re - 2.0 * b.dotc(&c).re + c.dotc(&(&t * &c)).re;
    Ok(SzegoSolution { infimum: value.max(0.0), coefficients: c.iter().copied().collect() })
}

pub fn szego_infimum_ls(w: &Weight, degree: usize) -> Result<f64> {
    Ok(szego_ls(w, degree)?.infimum)
}

/// Grid quadrature of `|1 − f|²·w`.
pub fn weighted_residual(w: &Weight, f: &FourierPoly) -> f64 {
    let fs = f.samples(w.len());
    fs.samples()
        .iter()
        .zip(w.samples())
        .map(|(v, wk)| (C64::new(1.0, 0.0) - v).norm_sqr() * wk)
        .sum::<f64>()
        / w.len() as f64
}
