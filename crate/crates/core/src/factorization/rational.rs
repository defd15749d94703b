use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fourier::{FourierPoly, GridFunction};
use crate::linalg::poly_roots;
use crate::C64;

/// Anything that can be evaluated on the closed disk and sampled on the
/// circle, so that interpolants of different representations share one
/// verifier.
pub trait DiskFunction {
    fn value_at(&self, z: C64) -> C64;

    fn boundary_samples(&self, m: usize) -> GridFunction;

    /// Taylor coefficients `0..len` at the origin.
    fn taylor_head(&self, len: usize) -> Vec<C64>;

    fn has_real_coefficients(&self, tol: f64) -> bool;
}

impl DiskFunction for FourierPoly {
    fn value_at(&self, z: C64) -> C64 {
        self.eval(z)
    }

    fn boundary_samples(&self, m: usize) -> GridFunction {
        self.samples(m)
    }

    fn taylor_head(&self, len: usize) -> Vec<C64> {
        self.taylor_coeffs(len)
    }

    fn has_real_coefficients(&self, tol: f64) -> bool {
        self.is_real_type(tol * self.max_abs_coeff().max(1.0))
    }
}

/// Quotient `num/den` of analytic polynomials with `den` zero-free on the
/// closed disk.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RationalDiskFunction {
    num: FourierPoly,
    den: FourierPoly,
}

impl RationalDiskFunction {
    /// Validates analyticity and that `den` has no zero in the closed disk;
    /// the result is scaled so that `den(0) = 1`.
    pub fn new(num: FourierPoly, den: FourierPoly) -> Result<Self> {
        if let Some(lo) = num.lo().filter(|&l| l < 0).or(den.lo().filter(|&l| l < 0)) {
            return Err(Error::NonAnalytic { lo });
        }
        let d0 = den.coeff(0);
        if d0.norm() == 0.0 {
            return Err(Error::InvalidInput("denominator vanishes at the origin".into()));
        }
        if let Some(r) = poly_roots(&den.taylor_coeffs(den.width()))
            .into_iter()
            .find(|r| r.norm() <= 1.0)
        {
            return Err(Error::InvalidInput(format!(
                "denominator vanishes at {r} inside the closed disk"
            )));
        }
        Ok(Self::from_parts(num, den))
    }

    pub(crate) fn from_parts(num: FourierPoly, den: FourierPoly) -> Self {
        let d0 = den.coeff(0);
        let s = C64::new(1.0, 0.0) / d0;
        RationalDiskFunction {
            num: num.scale(s),
            den: den.scale(s),
        }
    }

    pub fn polynomial(p: FourierPoly) -> Self {
        RationalDiskFunction {
            num: p,
            den: FourierPoly::one(),
        }
    }

    pub fn constant(c: C64) -> Self {
        Self::polynomial(FourierPoly::constant(c))
    }

    pub fn num(&self) -> &FourierPoly {
        &self.num
    }

    pub fn den(&self) -> &FourierPoly {
        &self.den
    }

    pub fn degree(&self) -> i64 {
        self.num.hi().unwrap_or(0).max(self.den.hi().unwrap_or(0))
    }

    pub fn eval(&self, z: C64) -> C64 {
        self.num.eval(z) / self.den.eval(z)
    }

    /// First `degree + 1` Taylor coefficients by power-series division.
    pub fn taylor(&self, degree: usize) -> FourierPoly {
        FourierPoly::from_dense(0, &self.taylor_dense(degree + 1))
    }

    fn taylor_dense(&self, len: usize) -> Vec<C64> {
        let den: Vec<C64> = self.den.taylor_coeffs(self.den.width().max(1));
        let d0 = den[0];
        let mut q = vec![C64::new(0.0, 0.0); len];
        for k in 0..len {
            let mut acc = self.num.coeff(k as i64);
            for (j, &dj) in den.iter().enumerate().skip(1).take(k) {
                acc -= dj * q[k - j];
            }
            q[k] = acc / d0;
        }
        q
    }

    /// Coefficient conjugation on numerator and denominator.
    pub fn star(&self) -> RationalDiskFunction {
        RationalDiskFunction {
            num: self.num.star(),
            den: self.den.star(),
        }
    }

    /// `Φ(f) = (f + f*)/2 = (N·D* + N*·D) / (2·D·D*)`, exact and real-type.
    pub fn phi(&self) -> RationalDiskFunction {
        let num = (&self.num * &self.den.star()) + (&self.num.star() * &self.den);
        let den = (&self.den * &self.den.star()).scale(C64::new(2.0, 0.0));
        Self::from_parts(num.phi(), den.phi())
    }

    /// Coefficient-wise real part of numerator and denominator, valid when the
    /// function is already real-type up to rounding (`den(0) = 1`).
    pub fn real_part_coefficients(&self) -> RationalDiskFunction {
        RationalDiskFunction {
            num: self.num.phi(),
            den: self.den.phi(),
        }
    }

    pub fn scale(&self, s: C64) -> RationalDiskFunction {
        RationalDiskFunction {
            num: self.num.scale(s),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &FourierPoly) -> RationalDiskFunction {
        RationalDiskFunction {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    pub fn is_real_type(&self, tol: f64) -> bool {
        let scale = self.num.max_abs_coeff().max(self.den.max_abs_coeff()).max(1.0);
        self.num.is_real_type(tol * scale) && self.den.is_real_type(tol * scale)
    }

    /// Cancels numerator/denominator root pairs that agree within `tol` and
    /// rebuilds both polynomials from the remaining roots.
    pub fn reduced(&self, tol: f64) -> RationalDiskFunction {
        let (Some(nlo), Some(_)) = (self.num.lo(), self.den.lo()) else {
            return self.clone();
        };
        let num_roots = poly_roots(&self.num.shift(-nlo).taylor_coeffs(self.num.width()));
        let den_roots = poly_roots(&self.den.taylor_coeffs(self.den.width()));
        let mut used = vec![false; den_roots.len()];
        let mut keep_num = Vec::new();
        let mut cancelled = false;
        for r in num_roots {
            let hit = den_roots
                .iter()
                .enumerate()
                .filter(|(i, s)| !used[*i] && (r - **s).norm() <= tol * s.norm().max(1.0))
                .min_by(|a, b| (r - *a.1).norm().total_cmp(&(r - *b.1).norm()));
            match hit {
                Some((i, _)) => {
                    used[i] = true;
                    cancelled = true;
                }
                None => keep_num.push(r),
            }
        }
        if !cancelled {
            return self.clone();
        }
        let keep_den: Vec<C64> = den_roots
            .iter()
            .zip(&used)
            .filter(|(_, &u)| !u)
            .map(|(&s, _)| s)
            .collect();
        let num_lead = self.num.coeff(self.num.hi().unwrap());
        let den_lead = self.den.coeff(self.den.hi().unwrap());
        let num = from_roots(&keep_num).scale(num_lead).shift(nlo);
        let den = from_roots(&keep_den).scale(den_lead);
        Self::from_parts(num, den)
    }
}

/// `Π (z − rₖ)`, monic.
pub fn from_roots(roots: &[C64]) -> FourierPoly {
    let mut coeffs = vec![C64::new(1.0, 0.0)];
    for &r in roots {
        let mut next = vec![C64::new(0.0, 0.0); coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * r;
        }
        coeffs = next;
    }
    FourierPoly::from_dense(0, &coeffs)
}

impl DiskFunction for RationalDiskFunction {
    fn value_at(&self, z: C64) -> C64 {
        self.eval(z)
    }

    fn boundary_samples(&self, m: usize) -> GridFunction {
        let n = self.num.samples(m);
        let d = self.den.samples(m);
        GridFunction::new(
            n.samples()
                .iter()
                .zip(d.samples())
                .map(|(a, b)| a / b)
                .collect(),
        )
        .expect("same grid")
    }

    fn taylor_head(&self, len: usize) -> Vec<C64> {
        self.taylor_dense(len)
    }

    fn has_real_coefficients(&self, tol: f64) -> bool {
        self.is_real_type(tol)
    }
}
