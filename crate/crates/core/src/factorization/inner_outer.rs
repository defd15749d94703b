use serde::Serialize;

use crate::error::{Error, Result};
use crate::factorization::{blaschke_product, from_roots, outer_from_modulus, DiskFunction, RationalDiskFunction, BOUNDARY_EPS};
use crate::fourier::{next_grid_size, FourierPoly, GridFunction, Norm, MIN_QUADRATURE_GRID};
use crate::linalg::poly_roots;
use crate::tolerance::{ToleranceConfig, DEFAULT_DROP_TOL};
use crate::C64;

/// `f = sign · inner · outer`.
#[derive(Debug, Clone, Serialize)]
pub struct FactorizationResult {
    /// `z^m` times the Blaschke product over the zeros strictly inside the
    /// disk; its lowest nonzero coefficient is positive.
    pub inner: RationalDiskFunction,
    /// Polynomial outer factor with `Re u(0) > 0`.
    pub outer: FourierPoly,
    pub sign: i8,
    /// `‖f − sign·inner·outer‖₂`.
    pub residual: f64,
    pub origin_order: usize,
    pub inner_zeros: Vec<C64>,
    /// Zeros in the band `1 − ε ≤ |a| ≤ 1 + ε`, assigned to the outer factor.
    pub boundary_zeros: Vec<C64>,
    pub real_type: bool,
}

impl FactorizationResult {
    /// Evaluates `sign · inner · outer`.
    pub fn eval(&self, z: C64) -> C64 {
        self.inner.eval(z) * self.outer.eval(z) * self.sign as f64
    }
}

/// Decides whether a coefficient list needs a sign flip so that its first
/// coefficient above `drop_tol · max` is real positive; `None` when the first
/// significant coefficient is not real at all.
pub fn canonical_sign_flip(coeffs: impl IntoIterator<Item = C64>, drop_tol: f64) -> Option<bool> {
    let coeffs: Vec<C64> = coeffs.into_iter().collect();
    let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let first = coeffs.iter().find(|c| c.norm() > drop_tol * scale)?;
    if first.im.abs() > 1e-8 * first.norm() {
        return None;
    }
    Some(first.re < 0.0)
}

/// Pairs each non-real root with its nearest conjugate partner and snaps the
/// rest onto the real axis, so products of linear factors come out real.
fn symmetrize_roots(roots: &[C64]) -> Vec<C64> {
    let snap = |r: &C64| r.im.abs() <= 1e-12 * r.norm().max(1.0);
    let mut out: Vec<C64> = roots.iter().filter(|r| snap(r)).map(|r| C64::new(r.re, 0.0)).collect();
    let upper: Vec<C64> = roots.iter().filter(|r| !snap(r) && r.im > 0.0).copied().collect();
    let mut lower: Vec<Option<C64>> = roots.iter().filter(|r| !snap(r) && r.im < 0.0).map(|&r| Some(r)).collect();
    for r in upper {
        let partner = lower
            .iter()
            .enumerate()
            .filter_map(|(i, s)| s.map(|s| (i, (s - r.conj()).norm())))
            .min_by(|a, b| a.1.total_cmp(&b.1));
        match partner {
            Some((i, _)) => {
                let s = lower[i].take().unwrap();
                let avg = (r + s.conj()) / 2.0;
                out.push(avg);
                out.push(avg.conj());
            }
            None => out.push(C64::new(r.re, 0.0)),
        }
    }
    out.extend(lower.into_iter().flatten().map(|s| C64::new(s.re, 0.0)));
    out
}

/// Inner–outer factorization of an analytic polynomial.
///
/// Roots come from the companion matrix. Roots with `|a| < 1 − ε` form the
/// Blaschke part of the inner factor (together with the zero of order `m` at
/// the origin); every other root stays in the outer polynomial. For
/// real-coefficient input the roots are paired with their conjugates and both
/// factors are projected onto real coefficients. Any remaining `±1` is carried
/// in `sign` so that the outer factor has `Re u(0) > 0`.
pub fn inner_outer(f: &FourierPoly, tol: &ToleranceConfig) -> Result<FactorizationResult> {
    let Some(lo) = f.lo() else {
        return Err(Error::ZeroPolynomial);
    };
    if lo < 0 {
        return Err(Error::NonAnalytic { lo });
    }
    let real_type = f.is_real_type(tol.eq_tol * f.max_abs_coeff());
    let shifted = f.shift(-lo);
    let coeffs = shifted.taylor_coeffs(shifted.width());
    let lead = *coeffs.last().unwrap();
    let mut roots = poly_roots(&coeffs);
    if real_type {
        roots = symmetrize_roots(&roots);
    }

    let mut inner_zeros = Vec::new();
    let mut outer_roots = Vec::new();
    let mut boundary_zeros = Vec::new();
    for r in roots {
        let m = r.norm();
        if m < 1.0 - BOUNDARY_EPS {
            inner_zeros.push(r);
        } else {
            if m <= 1.0 + BOUNDARY_EPS {
                boundary_zeros.push(r);
            }
            outer_roots.push(r);
        }
    }

    let mut inner = blaschke_product(&inner_zeros, lo as usize)?;
    // (z − a) = −(a/|a|)(1 − āz)·b_a(z)
    let mut outer = from_roots(&outer_roots).scale(lead);
    for &a in &inner_zeros {
        if a.norm() == 0.0 {
            continue;
        }
        let unit = a / a.norm();
        let factor = FourierPoly::from_dense(0, &[-unit, unit * a.conj()]);
        outer = &outer * &factor;
    }

    if canonical_sign_flip(inner.num().iter().map(|(_, c)| c), DEFAULT_DROP_TOL) == Some(true) {
        inner = inner.scale(C64::new(-1.0, 0.0));
        outer = outer.scale(C64::new(-1.0, 0.0));
    }
    let mut sign: i8 = 1;
    if outer.coeff(0).re < 0.0 {
        sign = -1;
        outer = outer.scale(C64::new(-1.0, 0.0));
    }
    if real_type {
        inner = inner.real_part_coefficients();
        outer = outer.phi();
    }

    let mut result = FactorizationResult {
        inner,
        outer,
        sign,
        residual: 0.0,
        origin_order: lo as usize,
        inner_zeros,
        boundary_zeros,
        real_type,
    };
    result.residual = reconstruction_residual(f, &result);
    Ok(result)
}

fn reconstruction_residual(f: &FourierPoly, fact: &FactorizationResult) -> f64 {
    let m = next_grid_size((8 * f.width()).max(512));
    let target = f.samples(m);
    let inner = fact.inner.boundary_samples(m);
    let outer = fact.outer.samples(m);
    let s = fact.sign as f64;
    let sum: f64 = target
        .samples()
        .iter()
        .zip(inner.samples())
        .zip(outer.samples())
        .map(|((t, i), o)| (t - i * o * s).norm_sqr())
        .sum();
    (sum / m as f64).sqrt()
}

/// `f = f₁·f₂` with `‖f‖₁ = ‖f₁‖₂² = ‖f₂‖₂²`.
#[derive(Debug, Clone, Serialize)]
pub struct RieszFactorization {
    pub f1: FourierPoly,
    pub f2: FourierPoly,
    pub degree: usize,
    pub l1_norm: f64,
    pub f1_norm_sq: f64,
    pub f2_norm_sq: f64,
    pub factorization: FactorizationResult,
}

impl RieszFactorization {
    /// Largest pairwise gap among `‖f‖₁`, `‖f₁‖₂²`, `‖f₂‖₂²`.
    pub fn norm_gap(&self) -> f64 {
        let v = [self.l1_norm, self.f1_norm_sq, self.f2_norm_sq];
        let max = v.iter().copied().fold(f64::MIN, f64::max);
        let min = v.iter().copied().fold(f64::MAX, f64::min);
        max - min
    }
}

/// Taylor degree at which the tails of `√u` and `φ√u` fall below roundoff,
/// from the singularity of `f`'s factors nearest the circle. Clamped to
/// `64..=4096`.
pub fn riesz_truncation_degree(fact: &FactorizationResult) -> usize {
    let mut nearest = f64::INFINITY;
    for r in fact.inner_zeros.iter() {
        if r.norm() > 0.0 {
            nearest = nearest.min(1.0 / r.norm());
        }
    }
    let outer_coeffs = fact.outer.taylor_coeffs(fact.outer.width());
    for r in poly_roots(&outer_coeffs) {
        nearest = nearest.min(r.norm());
    }
    if !nearest.is_finite() {
        return 64;
    }
    if nearest <= 1.0 + BOUNDARY_EPS {
        return 4096;
    }
    let n = (38.0 / nearest.ln()).ceil() + 16.0;
    (n as usize).clamp(64, 4096)
}

/// Riesz factorization through `g = outer_from_modulus(√|f|)`: `f₂ = g` and
/// `f₁ = sign·λ·φ·g` truncated at `degree`, where `λ = u(0)/g(0)²` is the
/// unimodular constant relating `g²` to the outer factor (`1` for real input).
pub fn riesz_factorize(f: &FourierPoly, degree: usize, tol: &ToleranceConfig) -> Result<RieszFactorization> {
    let fact = inner_outer(f, tol)?;
    let m = next_grid_size((4 * (degree + 1)).max(MIN_QUADRATURE_GRID));
    let samples = f.samples(m);
    let root_modulus = GridFunction::new(
        samples
            .samples()
            .iter()
            .map(|s| C64::new(s.norm().sqrt(), 0.0))
            .collect(),
    )?;
    let mut g = outer_from_modulus(&root_modulus, degree)?;
    let g0 = g.coeff(0);
    let lambda = fact.outer.coeff(0) / (g0 * g0);
    let lambda = lambda / lambda.norm();
    let mut f1 = fact
        .inner
        .mul_poly(&g)
        .taylor(degree)
        .scale(lambda * fact.sign as f64);
    if fact.real_type {
        f1 = f1.phi();
        g = g.phi();
    }
    let l1_norm = samples.mean_abs();
    let f1_norm_sq = f1.norm(Norm::L2).powi(2);
    let f2_norm_sq = g.norm(Norm::L2).powi(2);
    Ok(RieszFactorization {
        f1,
        f2: g,
        degree,
        l1_norm,
        f1_norm_sq,
        f2_norm_sq,
        factorization: fact,
    })
}
