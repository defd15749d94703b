use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use super::basis::{ShiftPowers, SubspaceBasis, GS_DROP};
use crate::error::{Error, Result};
use crate::factorization::{inner_outer, RationalDiskFunction};
use crate::fourier::FourierPoly;
use crate::linalg::{null_space, spectral_norm};
use crate::tolerance::ToleranceConfig;
use crate::C64;

/// Fits above this are reported as [`Form::Undetermined`].
pub const UNDETERMINED_FIT: f64 = 1e-4;

/// Size of `v_{j+1}` on `{v ∈ 𝓜 : v_j = 0}` above which `𝓜` counts as
/// `z`-invariant.
const INVARIANCE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Form {
    /// `φ·H²`.
    Beurling,
    /// `φ·([1 + cz] ⊕ z²H²)`.
    Constrained,
    /// All of `H²`.
    Full,
    Undetermined,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationResult {
    pub form: Form,
    /// Taylor coefficients of the inner function below the budget.
    pub phi: FourierPoly,
    pub inner: RationalDiskFunction,
    /// Zeros of `φ` away from the origin.
    pub zeros: Vec<C64>,
    /// Order of `φ` at the origin. When it is positive the pair `(φ, c)` is
    /// normalized by keeping the `z`-power inside `φ`.
    pub origin_order: usize,
    pub c: Option<f64>,
    /// Largest sine of the angle between `𝓜` and the model subspace.
    pub fit: f64,
    pub z_invariant: bool,
    pub dimension: usize,
}

/// Normalized projection of `e_j` onto the span of the orthonormal columns of
/// `q`, with coefficients below `j` cleared.
fn projected_unit(q: &DMatrix<f64>, j: usize) -> DVector<f64> {
    let mut w = q * q.row(j).transpose();
    for i in 0..j {
        w[i] = 0.0;
    }
    w
}

/// Unit vector spanning `𝓜 ⊖ z𝓜` for a `z`-invariant subspace: the
/// projection of `z^j` onto `𝓜`, where `j` is the order of `𝓜` at the origin.
/// Its leading coefficient is positive.
pub fn wandering_vector(m: &SubspaceBasis) -> Result<FourierPoly> {
    let j = m.order_at_origin().ok_or_else(|| Error::InvalidInput("empty subspace".into()))?;
    let w = projected_unit(&m.matrix(), j);
    let low = w.rows(0, m.safe_degree().min(m.budget())).norm();
    if low <= GS_DROP {
        return Err(Error::DoublyInvariant);
    }
    let w = &w / w.norm();
    Ok(FourierPoly::from_real(0, w.as_slice()))
}

/// Whether `{v ∈ 𝓜 : v_j = 0}` reaches index `j + 1`, which for subspaces
/// invariant under `z²` and `z³` is equivalent to `z𝓜 ⊆ 𝓜`.
fn is_z_invariant(m: &SubspaceBasis, j: usize) -> bool {
    if m.powers() == Some(ShiftPowers::One) {
        return true;
    }
    if j + 1 >= m.budget() {
        return false;
    }
    let q = m.matrix();
    let r0 = q.row(j).transpose();
    let r1 = q.row(j + 1).transpose();
    let resid = &r1 - &r0 * (r1.dot(&r0) / r0.dot(&r0));
    resid.norm() > INVARIANCE_TOL
}

/// Orthonormal basis of the orthogonal complement of the model subspace,
/// truncated to `len` coefficients: the Takenaka–Malmquist functions of `φ`'s
/// zeros (spanning `H² ⊖ φH²`) and, for the constrained model, `φ(z − c)`.
pub fn model_complement(
    zeros: &[C64],
    origin_order: usize,
    constrained: Option<(&RationalDiskFunction, f64)>,
    len: usize,
) -> Vec<Vec<C64>> {
    let one = C64::new(1.0, 0.0);
    let all: Vec<C64> = std::iter::repeat_n(C64::new(0.0, 0.0), origin_order).chain(zeros.iter().copied()).collect();
    let mut out = Vec::with_capacity(all.len() + 1);
    let mut num = FourierPoly::one();
    let mut den = FourierPoly::one();
    for &a in &all {
        den = &den * &FourierPoly::from_dense(0, &[one, -a.conj()]);
        let scale = C64::new((1.0 - a.norm_sqr()).sqrt(), 0.0);
        let e = RationalDiskFunction::from_parts(num.scale(scale), den.clone());
        out.push(e.taylor(len - 1).taylor_coeffs(len));
        num = &num * &FourierPoly::from_dense(0, &[-a, one]);
    }
    if let Some((phi, c)) = constrained {
        let s = 1.0 / (1.0 + c * c).sqrt();
        let e = phi.mul_poly(&FourierPoly::from_real(0, &[-c * s, s]));
        out.push(e.taylor(len - 1).taylor_coeffs(len));
    }
    out
}

/// Recovers the structure of an invariant subspace.
///
/// For `z`-invariant subspaces `φ` is the inner part of the wandering vector.
/// Otherwise `S = {v ∈ 𝓜 : v_j = v_{j+1} = 0}` equals `φz²H²`, so `φ` is the
/// inner part of `S`'s wandering vector divided by `z²`, and
/// `c = v_{j+1}/v_j − φ_{j+1}/φ_j` for any `v ∈ 𝓜` with `v_j ≠ 0`.
///
/// The fit is the largest component of a unit vector of `𝓜` orthogonal to the
/// model. The reverse inclusion holds by construction, since `φ` is the inner
/// part of an element of `𝓜`.
pub fn classify(m: &SubspaceBasis, tol: &ToleranceConfig) -> Result<ClassificationResult> {
    let j = m.order_at_origin().ok_or_else(|| Error::InvalidInput("empty subspace".into()))?;
    let n = m.budget();
    let q = m.matrix();
    let z_invariant = is_z_invariant(m, j);

    let (inner, zeros, origin_order, c) = if z_invariant {
        let w = wandering_vector(m)?;
        let fact = inner_outer(&w, tol)?;
        (fact.inner, fact.inner_zeros, fact.origin_order, None)
    } else {
        let rows = DMatrix::from_fn(2, q.ncols(), |r, k| q[(j + r, k)]);
        let kernel = null_space(&rows, GS_DROP);
        if kernel.is_empty() || j + 2 >= n {
            return Err(Error::InvalidInput("subspace too small to classify".into()));
        }
        let s = DMatrix::from_columns(&kernel.iter().map(|x| &q * x).collect::<Vec<_>>());
        let w = projected_unit(&s, j + 2);
        let fact = inner_outer(&FourierPoly::from_real(0, w.as_slice()), tol)?;
        if fact.origin_order < 2 {
            return Err(Error::InvalidInput("constrained part has no double zero at the origin".into()));
        }
        let inner = RationalDiskFunction::from_parts(fact.inner.num().shift(-2), fact.inner.den().clone());
        let u = projected_unit(&q, j);
        let head = inner.taylor(j + 1);
        let ratio = head.coeff(j as i64 + 1).re / head.coeff(j as i64).re;
        let c = u[j + 1] / u[j] - ratio;
        (inner, fact.inner_zeros, fact.origin_order - 2, Some(c))
    };

    let complement = model_complement(&zeros, origin_order, c.map(|c| (&inner, c)), n);
    let fit = if complement.is_empty() {
        0.0
    } else {
        let overlaps = DMatrix::from_fn(q.ncols(), complement.len(), |i, k| {
            (0..n).map(|t| complement[k][t].conj() * q[(t, i)]).sum::<C64>()
        });
        spectral_norm(&overlaps)
    };

    let form = if fit > UNDETERMINED_FIT {
        Form::Undetermined
    } else if !z_invariant {
        Form::Constrained
    } else if zeros.is_empty() && origin_order == 0 {
        Form::Full
    } else {
        Form::Beurling
    };
    Ok(ClassificationResult {
        form,
        phi: inner.taylor(n - 1),
        inner,
        zeros,
        origin_order,
        c,
        fit,
        z_invariant,
        dimension: m.dim(),
    })
}
