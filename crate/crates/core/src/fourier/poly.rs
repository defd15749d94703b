use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fourier::grid::{next_grid_size, synthesize, GridFunction};
use crate::tolerance::DEFAULT_DROP_TOL;
use crate::C64;

/// Grid size floor for the L¹ and L∞ quadratures.
pub const MIN_QUADRATURE_GRID: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Norm {
    L1,
    L2,
    Linf,
}

/// A finite Laurent series `Σ aₙ zⁿ` on the unit circle.
///
/// Coefficients are stored sparsely by signed index. Entries whose magnitude
/// is at most `drop_tol` times the largest magnitude are pruned on
/// construction, so the zero polynomial has no entries and no support bounds.
#[derive(Clone, Default, PartialEq)]
pub struct FourierPoly {
    coeffs: BTreeMap<i64, C64>,
}

impl FourierPoly {
    pub fn zero() -> Self {
        FourierPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(C64::new(1.0, 0.0))
    }

    pub fn constant(c: C64) -> Self {
        Self::monomial(0, c)
    }

    /// `c·zⁿ`.
    pub fn monomial(n: i64, c: C64) -> Self {
        Self::from_coeffs([(n, c)])
    }

    /// Builds a polynomial from `(index, coefficient)` pairs; repeated indices
    /// are summed.
    pub fn from_coeffs(pairs: impl IntoIterator<Item = (i64, C64)>) -> Self {
        Self::from_coeffs_with_tol(pairs, DEFAULT_DROP_TOL)
    }

    pub fn from_coeffs_with_tol(pairs: impl IntoIterator<Item = (i64, C64)>, drop_tol: f64) -> Self {
        let mut coeffs = BTreeMap::new();
        for (n, c) in pairs {
            *coeffs.entry(n).or_insert(C64::new(0.0, 0.0)) += c;
        }
        FourierPoly { coeffs }.pruned(drop_tol)
    }

    /// Dense coefficients starting at index `lo`.
    pub fn from_dense(lo: i64, coeffs: &[C64]) -> Self {
        Self::from_coeffs(coeffs.iter().enumerate().map(|(j, &c)| (lo + j as i64, c)))
    }

    pub fn from_real(lo: i64, coeffs: &[f64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .enumerate()
                .map(|(j, &c)| (lo + j as i64, C64::new(c, 0.0))),
        )
    }

    /// Drops coefficients with `|aₙ| <= drop_tol · max |aₖ|` (and exact zeros).
    pub fn pruned(mut self, drop_tol: f64) -> Self {
        let scale = self.max_abs_coeff();
        let cutoff = drop_tol * scale;
        self.coeffs.retain(|_, c| {
            let m = c.norm();
            m > 0.0 && m > cutoff
        });
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lo(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn hi(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Number of indices in `lo..=hi`, zero for the zero polynomial.
    pub fn width(&self) -> usize {
        match (self.lo(), self.hi()) {
            (Some(lo), Some(hi)) => (hi - lo + 1) as usize,
            _ => 0,
        }
    }

    pub fn coeff(&self, n: i64) -> C64 {
        self.coeffs.get(&n).copied().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, C64)> + '_ {
        self.coeffs.iter().map(|(&n, &c)| (n, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Dense coefficients over `lo..=hi`.
    pub fn dense(&self, lo: i64, hi: i64) -> Vec<C64> {
        (lo..=hi).map(|n| self.coeff(n)).collect()
    }

    /// Taylor coefficients `a₀..a_{len-1}` of an analytic polynomial.
    pub fn taylor_coeffs(&self, len: usize) -> Vec<C64> {
        (0..len as i64).map(|n| self.coeff(n)).collect()
    }

    /// Real parts of the coefficients at indices `0..len`.
    pub fn real_taylor_coeffs(&self, len: usize) -> Vec<f64> {
        (0..len as i64).map(|n| self.coeff(n).re).collect()
    }

    /// True when no coefficient has a negative index.
    pub fn is_analytic(&self) -> bool {
        self.lo().is_none_or(|lo| lo >= 0)
    }

    /// True when every coefficient satisfies `|Im aₙ| <= tol`.
    pub fn is_real_type(&self, tol: f64) -> bool {
        self.coeffs.values().all(|c| c.im.abs() <= tol)
    }

    pub fn max_imag(&self) -> f64 {
        self.coeffs.values().map(|c| c.im.abs()).fold(0.0, f64::max)
    }

    /// `f*(e^{iθ}) = conj f(e^{-iθ})`, which conjugates every coefficient in
    /// place.
    pub fn star(&self) -> FourierPoly {
        FourierPoly {
            coeffs: self.coeffs.iter().map(|(&n, c)| (n, c.conj())).collect(),
        }
    }

    /// Projection `(f + f*)/2` onto real-coefficient functions: the
    /// coefficient-wise real part.
    pub fn phi(&self) -> FourierPoly {
        FourierPoly {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(_, c)| c.re != 0.0)
                .map(|(&n, c)| (n, C64::new(c.re, 0.0)))
                .collect(),
        }
    }

    /// The real-type `h` with `f = Φ(f) + i·h`, i.e. `Φ((f − Φ(f))/i)`.
    pub fn imaginary_component(&self) -> FourierPoly {
        FourierPoly {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(_, c)| c.im != 0.0)
                .map(|(&n, c)| (n, C64::new(c.im, 0.0)))
                .collect(),
        }
    }

    pub fn scale(&self, s: C64) -> FourierPoly {
        Self::from_coeffs(self.coeffs.iter().map(|(&n, &c)| (n, c * s)))
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: i64) -> FourierPoly {
        FourierPoly {
            coeffs: self.coeffs.iter().map(|(&n, &c)| (n + k, c)).collect(),
        }
    }

    /// Keeps the coefficients with index `<= max_index`.
    pub fn truncate(&self, max_index: i64) -> FourierPoly {
        FourierPoly {
            coeffs: self.coeffs.range(..=max_index).map(|(&n, &c)| (n, c)).collect(),
        }
    }

    /// Coefficient convolution.
    pub fn multiply(&self, other: &FourierPoly) -> FourierPoly {
        let (Some(lo_a), Some(lo_b)) = (self.lo(), other.lo()) else {
            return FourierPoly::zero();
        };
        let a = self.dense(lo_a, self.hi().unwrap());
        let b = other.dense(lo_b, other.hi().unwrap());
        let mut out = vec![C64::new(0.0, 0.0); a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == C64::new(0.0, 0.0) {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        Self::from_dense(lo_a + lo_b, &out)
    }

    /// The normalized circle integral `∫ f g dθ/2π = Σₙ fₙ g₋ₙ`.
    pub fn pairing(&self, other: &FourierPoly) -> C64 {
        self.coeffs
            .iter()
            .map(|(&n, &c)| c * other.coeff(-n))
            .sum()
    }

    /// The `L²` inner product `Σₙ fₙ conj(gₙ)`.
    pub fn inner(&self, other: &FourierPoly) -> C64 {
        self.coeffs
            .iter()
            .map(|(&n, &c)| c * other.coeff(n).conj())
            .sum()
    }

    pub fn norm_l2(&self) -> f64 {
        self.coeffs.values().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Grid size used for the L¹ and L∞ quadratures.
    pub fn quadrature_grid(&self) -> usize {
        next_grid_size((4 * self.width()).max(MIN_QUADRATURE_GRID))
    }

    /// `L¹`/`L∞` are grid approximations on [`Self::quadrature_grid`]; `L²` is
    /// exact by Parseval.
    pub fn norm(&self, which: Norm) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        match which {
            Norm::L2 => self.norm_l2(),
            Norm::L1 => self.samples(self.quadrature_grid()).mean_abs(),
            Norm::Linf => self.samples(self.quadrature_grid()).max_abs(),
        }
    }

    /// Samples at `θₖ = 2πk/M` without the anti-aliasing check (sampling is
    /// exact for any `M`; only the inverse map needs the bound).
    pub fn samples(&self, m: usize) -> GridFunction {
        let buf = match self.lo() {
            None => vec![C64::new(0.0, 0.0); m],
            Some(lo) if self.width() <= m => synthesize(lo, &self.dense(lo, self.hi().unwrap()), m),
            Some(_) => (0..m)
                .map(|k| self.eval_circle(std::f64::consts::TAU * k as f64 / m as f64))
                .collect(),
        };
        GridFunction::new(buf).expect("grid size validated by caller")
    }

    /// Samples on an `M`-point grid; `M` must be a power of two with
    /// `M >= 2·(hi − lo) + 2`.
    pub fn to_grid(&self, m: usize) -> Result<GridFunction> {
        if m < 2 || !m.is_power_of_two() {
            return Err(Error::GridNotPowerOfTwo(m));
        }
        let span = self.width().saturating_sub(1);
        if m < 2 * span + 2 {
            return Err(Error::Aliasing {
                grid: m,
                width: self.width(),
            });
        }
        Ok(self.samples(m))
    }

    /// Inverse of [`Self::to_grid`] over the index window `lo..=hi`.
    pub fn from_grid(g: &GridFunction, lo: i64, hi: i64) -> Result<FourierPoly> {
        g.to_poly(lo, hi)
    }

    pub fn eval_circle(&self, theta: f64) -> C64 {
        self.eval(C64::from_polar(1.0, theta))
    }

    /// Evaluates the Laurent series at any nonzero `z` (or any `z` when
    /// analytic).
    pub fn eval(&self, z: C64) -> C64 {
        let Some(lo) = self.lo() else {
            return C64::new(0.0, 0.0);
        };
        let hi = self.hi().unwrap();
        let mut acc = C64::new(0.0, 0.0);
        for n in (lo..=hi).rev() {
            acc = acc * z + self.coeff(n);
        }
        if lo != 0 {
            acc *= z.powi(lo as i32);
        }
        acc
    }

    /// `Σ aₙ zⁿ` at a point of the open disk.
    pub fn eval_disk(&self, z: C64) -> Result<C64> {
        if let Some(lo) = self.lo().filter(|&lo| lo < 0) {
            return Err(Error::NonAnalytic { lo });
        }
        if z.norm() >= 1.0 {
            return Err(Error::OutsideDisk { re: z.re, im: z.im });
        }
        Ok(self.eval(z))
    }

    /// Largest coefficient gap `max |aₙ − bₙ|`.
    pub fn max_coeff_diff(&self, other: &FourierPoly) -> f64 {
        let diff = self - other;
        diff.coeffs.values().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

impl fmt::Debug for FourierPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (n, c) in self.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({}{:+}i)z^{}", c.re, c.im, n)?;
        }
        Ok(())
    }
}

impl Add for &FourierPoly {
    type Output = FourierPoly;

    fn add(self, rhs: &FourierPoly) -> FourierPoly {
        FourierPoly::from_coeffs(self.iter().chain(rhs.iter()))
    }
}

impl Sub for &FourierPoly {
    type Output = FourierPoly;

    fn sub(self, rhs: &FourierPoly) -> FourierPoly {
        FourierPoly::from_coeffs(self.iter().chain(rhs.iter().map(|(n, c)| (n, -c))))
    }
}

impl Neg for &FourierPoly {
    type Output = FourierPoly;

    fn neg(self) -> FourierPoly {
        FourierPoly {
            coeffs: self.coeffs.iter().map(|(&n, &c)| (n, -c)).collect(),
        }
    }
}

impl Mul for &FourierPoly {
    type Output = FourierPoly;

    fn mul(self, rhs: &FourierPoly) -> FourierPoly {
        self.multiply(rhs)
    }
}

impl Add for FourierPoly {
    type Output = FourierPoly;

    fn add(self, rhs: FourierPoly) -> FourierPoly {
        &self + &rhs
    }
}

impl Sub for FourierPoly {
    type Output = FourierPoly;

    fn sub(self, rhs: FourierPoly) -> FourierPoly {
        &self - &rhs
    }
}

impl Mul for FourierPoly {
    type Output = FourierPoly;

    fn mul(self, rhs: FourierPoly) -> FourierPoly {
        self.multiply(&rhs)
    }
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    coeffs: Vec<(i64, f64, f64)>,
}

impl Serialize for FourierPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            coeffs: self.iter().map(|(n, c)| (n, c.re, c.im)).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FourierPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        Ok(FourierPoly::from_coeffs(
            repr.coeffs.into_iter().map(|(n, re, im)| (n, C64::new(re, im))),
        ))
    }
}
