use crate::error::{Error, Result};
use crate::fourier::{FourierPoly, GridFunction};
use crate::C64;

/// Smallest admissible modulus sample.
pub const MODULUS_FLOOR: f64 = 1e-10;

/// Harmonic conjugate: the coefficient at `n` is multiplied by `−i·sgn(n)`.
///
/// For a real-valued trigonometric polynomial `f`, `f + i·Q[f]` has no
/// negative-index coefficients.
pub fn conjugate_function(f: &FourierPoly) -> FourierPoly {
    FourierPoly::from_coeffs(f.iter().filter(|(n, _)| *n != 0).map(|(n, c)| {
        let sgn = n.signum() as f64;
        (n, c * C64::new(0.0, -sgn))
    }))
}

/// Outer function `u = exp(h)` with `|u| = m` on the circle, returned as its
/// Taylor polynomial of the given degree.
///
/// `h = P[log m] + i·Q[log m]` is built from the discrete Fourier coefficients
/// of `log m`, and the exponential is expanded with the recurrence
/// `n·uₙ = Σₖ k·hₖ·u_{n−k}`, so `u(0) = exp(mean log m)` exactly.
pub fn outer_from_modulus(m: &GridFunction, degree: usize) -> Result<FourierPoly> {
    let size = m.len();
    let max = size / 2 - 1;
    if degree > max {
        return Err(Error::DegreeTooLarge { degree, max });
    }
    let mut logs = Vec::with_capacity(size);
    for (index, s) in m.samples().iter().enumerate() {
        if s.im.abs() > 1e-12 * s.re.abs().max(1.0) {
            return Err(Error::InvalidInput(format!(
                "modulus sample {index} is not real: {s}"
            )));
        }
        if !(s.re >= MODULUS_FLOOR) || !s.re.is_finite() {
            return Err(Error::NonpositiveModulus { index, value: s.re });
        }
        logs.push(C64::new(s.re.ln(), 0.0));
    }
    let bins = GridFunction::new(logs)?.dft_coefficients();
    let mut h = Vec::with_capacity(degree + 1);
    h.push(C64::new(bins[0].re, 0.0));
    for bin in bins.iter().take(degree + 1).skip(1) {
        h.push(bin * 2.0);
    }
    Ok(FourierPoly::from_dense(0, &exp_series(&h)))
}

fn exp_series(h: &[C64]) -> Vec<C64> {
    let n = h.len();
    let mut u = vec![C64::new(0.0, 0.0); n];
    u[0] = h[0].exp();
    for k in 1..n {
        let mut acc = C64::new(0.0, 0.0);
        for j in 1..=k {
            acc += h[j] * u[k - j] * j as f64;
        }
        u[k] = acc / k as f64;
    }
    u
}

/// `mean log|u(θₖ)| − log|u(0)|` on an `m`-point grid.
///
/// Zero for outer functions; by Jensen's formula it equals
/// `Σ log(1/|a|)` over the zeros `a` of `u` inside the disk otherwise.
pub fn outer_defect(u: &FourierPoly, m: usize) -> f64 {
    let g = u.samples(m);
    let mean_log = g.samples().iter().map(|s| s.norm().ln()).sum::<f64>() / m as f64;
    mean_log - u.coeff(0).norm().ln()
}
