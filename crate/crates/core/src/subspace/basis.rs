use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fourier::FourierPoly;
use crate::linalg::{null_space, orthonormalize};

/// Relative residual below which Gram–Schmidt drops a candidate.
pub const GS_DROP: f64 = 1e-10;

/// Multiplication operators the subspace must be invariant under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub enum ShiftPowers {
    /// `{1}`: ordinary shift invariance.
    One,
    /// `{2, 3}`: invariance under `z²` and `z³`.
    TwoThree,
}

impl ShiftPowers {
    pub fn from_powers(powers: &[u32]) -> Result<Self> {
        let mut p = powers.to_vec();
        p.sort_unstable();
        p.dedup();
        match p.as_slice() {
            [1] => Ok(ShiftPowers::One),
            [2, 3] => Ok(ShiftPowers::TwoThree),
            _ => Err(Error::InvalidInput(format!("unsupported shift powers {powers:?}"))),
        }
    }

    pub fn powers(self) -> &'static [u32] {
        match self {
            ShiftPowers::One => &[1],
            ShiftPowers::TwoThree => &[2, 3],
        }
    }

    pub fn max_power(self) -> usize {
        match self {
            ShiftPowers::One => 1,
            ShiftPowers::TwoThree => 3,
        }
    }

    /// Membership in the additive monoid generated by the powers.
    pub fn contains(self, w: usize) -> bool {
        match self {
            ShiftPowers::One => true,
            ShiftPowers::TwoThree => w != 1,
        }
    }
}

impl TryFrom<Vec<u32>> for ShiftPowers {
    type Error = Error;

    fn try_from(p: Vec<u32>) -> Result<Self> {
        Self::from_powers(&p)
    }
}

impl From<ShiftPowers> for Vec<u32> {
    fn from(p: ShiftPowers) -> Self {
        p.powers().to_vec()
    }
}

/// Flips `v` so that its first entry of magnitude above `GS_DROP` is positive.
fn canonical_sign(mut v: Vec<f64>) -> Vec<f64> {
    if v.iter().find(|x| x.abs() > GS_DROP).is_some_and(|&x| x < 0.0) {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    v
}

/// Orthonormal basis of a subspace of real polynomials of degree `< budget`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubspaceBasis {
    vectors: Vec<Vec<f64>>,
    budget: usize,
    safe_degree: usize,
    powers: Option<ShiftPowers>,
}

fn real_coefficients(p: &FourierPoly, budget: usize, what: &str) -> Result<Vec<f64>> {
    if p.is_zero() {
        return Err(Error::InvalidInput(format!("{what} is zero")));
    }
    if let Some(lo) = p.lo().filter(|&l| l < 0) {
        return Err(Error::NonAnalytic { lo });
    }
    if !p.is_real_type(1e-12 * p.max_abs_coeff()) {
        return Err(Error::InvalidInput(format!("{what} does not have real coefficients")));
    }
    let hi = p.hi().unwrap() as usize;
    if hi >= budget {
        return Err(Error::DegreeTooLarge { degree: hi, max: budget - 1 });
    }
    Ok(p.real_taylor_coeffs(budget))
}

impl SubspaceBasis {
    /// Orthonormalizes an explicit list of real polynomials. The safe degree
    /// equals the budget.
    pub fn from_polys(polys: &[FourierPoly], budget: usize) -> Result<Self> {
        let cands = polys
            .iter()
            .map(|p| real_coefficients(p, budget, "vector").map(DVector::from_vec))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_candidates(&cands, budget, budget, None))
    }

    /// Orthonormal basis of the span of the candidates: left singular vectors
    /// of the column-normalized candidate matrix whose singular value exceeds
    /// `GS_DROP · σ_max`. Unlike sequential Gram–Schmidt, the rank decision is
    /// made once on the whole set, so long runs of dependent shifts cannot
    /// leak a spurious direction.
    fn from_candidates(cands: &[DVector<f64>], budget: usize, safe_degree: usize, powers: Option<ShiftPowers>) -> Self {
        let cols: Vec<DVector<f64>> = cands.iter().filter(|v| v.norm() > 0.0).map(|v| v / v.norm()).collect();
        let vectors = if cols.is_empty() {
            Vec::new()
        } else {
            let svd = DMatrix::from_columns(&cols).svd(true, false);
            let u = svd.u.expect("requested U");
            let smax = svd.singular_values.max();
            let mut keep: Vec<(f64, usize)> = svd
                .singular_values
                .iter()
                .enumerate()
                .filter(|(_, &sv)| sv > GS_DROP * smax)
                .map(|(i, &sv)| (sv, i))
                .collect();
            keep.sort_by(|a, b| b.0.total_cmp(&a.0));
            keep.iter().map(|&(_, i)| canonical_sign(u.column(i).iter().copied().collect())).collect()
        };
        SubspaceBasis { vectors, budget, safe_degree, powers }
    }

    pub fn vectors(&self) -> &[Vec<f64>] {
        &self.vectors
    }

    pub fn polys(&self) -> Vec<FourierPoly> {
        self.vectors.iter().map(|v| FourierPoly::from_real(0, v)).collect()
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn safe_degree(&self) -> usize {
        self.safe_degree
    }

    pub fn powers(&self) -> Option<ShiftPowers> {
        self.powers
    }

    /// Basis vectors as the columns of a `budget × dim` matrix.
    pub fn matrix(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.budget, self.dim(), |i, j| self.vectors[j][i])
    }

    /// `P_𝓜 x` for a real coefficient vector.
    pub fn project(&self, x: &DVector<f64>) -> DVector<f64> {
        let q = self.matrix();
        &q * (q.transpose() * x)
    }

    /// Orthonormal basis (as columns) of the elements of degree `< s`.
    pub fn below(&self, s: usize) -> DMatrix<f64> {
        let q = self.matrix();
        let s = s.min(self.budget);
        let top = q.rows(s, self.budget - s).into_owned();
        let kernel = null_space(&top, GS_DROP);
        let cands: Vec<DVector<f64>> = kernel.iter().map(|x| (&q * x).rows(0, s).into_owned()).collect();
        let cols = orthonormalize(&cands, GS_DROP);
        if cols.is_empty() {
            return DMatrix::zeros(s, 0);
        }
        DMatrix::from_columns(&cols)
    }

    /// Lowest coefficient index carried by some element of the subspace.
    pub fn order_at_origin(&self) -> Option<usize> {
        (0..self.budget).find(|&i| self.vectors.iter().any(|v| v[i].abs() > GS_DROP))
    }
}

/// Orthonormal basis of `span{zʷ·g : w in the monoid, w + deg g < N}`.
///
/// The safe degree is `N − max deg g − max power`: every shift that can
/// contribute below it is included, so the truncated span agrees there with
/// the closed invariant subspace.
pub fn generate_invariant(generators: &[FourierPoly], powers: ShiftPowers, budget: usize) -> Result<SubspaceBasis> {
    if generators.is_empty() {
        return Err(Error::InvalidInput("no generators".into()));
    }
    let mut max_deg = 0usize;
    for g in generators {
        if let Some(hi) = g.hi() {
            max_deg = max_deg.max(hi.max(0) as usize);
        }
    }
    let required = 4 * (max_deg + 4);
    if budget < required {
        return Err(Error::DegreeBudgetTooSmall { budget, required });
    }
    let mut cands = Vec::new();
    for g in generators {
        let coeffs = real_coefficients(g, budget, "generator")?;
        let deg = g.hi().unwrap() as usize;
        for w in (0..budget - deg).filter(|&w| powers.contains(w)) {
            let mut v = DVector::zeros(budget);
            v.rows_mut(w, budget - w).copy_from_slice(&coeffs[..budget - w]);
            cands.push(v);
        }
    }
    let safe = budget - max_deg - powers.max_power();
    Ok(SubspaceBasis::from_candidates(&cands, budget, safe, Some(powers)))
}

/// Largest principal-angle sine between the elements of degree below the
/// common safe degree. Subspaces of different dimension are at distance 1.
pub fn subspace_distance(a: &SubspaceBasis, b: &SubspaceBasis) -> f64 {
    let s = a.safe_degree().min(b.safe_degree());
    let qa = a.below(s);
    let qb = b.below(s);
    gap(&qa, &qb)
}

/// `max(‖(I − P_B) Q_A‖, ‖(I − P_A) Q_B‖)` for orthonormal column bases.
pub(crate) fn gap(qa: &DMatrix<f64>, qb: &DMatrix<f64>) -> f64 {
    let one_sided = |x: &DMatrix<f64>, y: &DMatrix<f64>| -> f64 {
        if x.ncols() == 0 {
            return 0.0;
        }
        let resid = x - y * (y.transpose() * x);
        resid.svd(false, false).singular_values.max()
    };
    one_sided(qa, qb).max(one_sided(qb, qa)).min(1.0)
}
