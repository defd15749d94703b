use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::nevanlinna::REAL_TAYLOR_DEGREE;
use crate::error::{Error, Result};
use crate::factorization::RationalDiskFunction;
use crate::fourier::FourierPoly;
use crate::linalg::spectral_norm;
use crate::tolerance::ToleranceConfig;
use crate::C64;

/// Prescribed Taylor coefficients `a₀..aₙ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CfProblem {
    taylor: Vec<C64>,
}

impl CfProblem {
    pub fn new(taylor: Vec<C64>) -> Result<Self> {
        if taylor.is_empty() {
            return Err(Error::InvalidInput("empty coefficient list".into()));
        }
        if let Some(a) = taylor.iter().find(|a| !a.is_finite()) {
            return Err(Error::InvalidInput(format!("non-finite coefficient {a}")));
        }
        Ok(CfProblem { taylor })
    }

    pub fn from_real(taylor: &[f64]) -> Result<Self> {
        Self::new(taylor.iter().map(|&a| C64::new(a, 0.0)).collect())
    }

    pub fn taylor(&self) -> &[C64] {
        &self.taylor
    }

    pub fn is_real(&self) -> bool {
        self.taylor.iter().all(|a| a.im == 0.0)
    }
}

/// Lower-triangular Toeplitz matrix with entry `(i, j) = a_{i−j}`.
pub fn cf_toeplitz(problem: &CfProblem) -> DMatrix<C64> {
    let a = problem.taylor();
    let n = a.len();
    DMatrix::from_fn(n, n, |i, j| if i >= j { a[i - j] } else { C64::new(0.0, 0.0) })
}

#[derive(Debug, Clone, Serialize)]
pub struct CfSolution {
    /// Output of the Schur recursion.
    pub classical: RationalDiskFunction,
    /// `Φ(classical)` for real data, `classical` otherwise.
    pub rational: RationalDiskFunction,
    pub taylor: FourierPoly,
    pub toeplitz_norm: f64,
    pub schur_parameters: Vec<C64>,
}

/// Carathéodory–Fejér interpolation by the Schur algorithm.
///
/// The recursion `f = (γ + z·g)/(1 + γ̄·z·g)` is run backwards on the
/// truncated power series; a parameter of modulus one (within `psd_tol`) ends
/// it with that constant. Real data yields real parameters, and the result is
/// passed through `Φ`, which leaves the leading coefficients unchanged.
pub fn cf_solve(problem: &CfProblem, tol: &ToleranceConfig) -> Result<CfSolution> {
    let toeplitz_norm = spectral_norm(&cf_toeplitz(problem));
    if toeplitz_norm > 1.0 + tol.psd_tol {
        return Err(Error::NotContraction { norm: toeplitz_norm });
    }
    let one = C64::new(1.0, 0.0);
    let mut series = problem.taylor().to_vec();
    let mut params = Vec::with_capacity(series.len());
    let mut terminal = C64::new(0.0, 0.0);
    while let Some(&g) = series.first() {
        if g.norm() >= 1.0 - tol.psd_tol {
            terminal = g / g.norm();
            break;
        }
        params.push(g);
        // g₁ = (f − γ)/(z·(1 − γ̄·f)) as a series one term shorter.
        let len = series.len() - 1;
        let den: Vec<C64> = (0..len)
            .map(|k| if k == 0 { one - g.conj() * series[0] } else { -g.conj() * series[k] })
            .collect();
        let mut next = vec![C64::new(0.0, 0.0); len];
        for k in 0..len {
            let mut acc = series[k + 1];
            for j in 1..=k {
                acc -= den[j] * next[k - j];
            }
            next[k] = acc / den[0];
        }
        series = next;
    }

    let z = FourierPoly::monomial(1, one);
    let mut num = FourierPoly::constant(terminal);
    let mut den = FourierPoly::one();
    for &g in params.iter().rev() {
        let zn = &z * &num;
        num = &den.scale(g) + &zn;
        den = &den + &zn.scale(g.conj());
    }
    let classical = RationalDiskFunction::from_parts(num, den);
    let rational = if problem.is_real() { classical.phi() } else { classical.clone() };
    let degree = REAL_TAYLOR_DEGREE.max(problem.taylor().len());
    let taylor = if problem.is_real() {
        classical.taylor(degree).phi()
    } else {
        classical.taylor(degree)
    };
    Ok(CfSolution { classical, rational, taylor, toeplitz_norm, schur_parameters: params })
}
