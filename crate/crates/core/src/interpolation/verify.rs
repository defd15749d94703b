use serde::Serialize;

use super::cf::CfProblem;
use super::problem::InterpolationProblem;
use crate::factorization::DiskFunction;

/// Circle grid used to bound the sup norm of interpolants.
pub const VERIFY_GRID: usize = 4096;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub sup_norm: f64,
    pub bounded: bool,
    /// One entry per interpolation condition, in problem order.
    pub residuals: Vec<f64>,
    pub max_residual: f64,
    pub interpolates: bool,
    pub real_type: bool,
    /// `bounded && interpolates`.
    pub pass: bool,
}

fn finish(f: &(impl DiskFunction + ?Sized), residuals: Vec<f64>, tol: f64) -> VerificationReport {
    let sup_norm = f.boundary_samples(VERIFY_GRID).max_abs();
    let max_residual = residuals.iter().copied().fold(0.0, f64::max);
    let bounded = sup_norm <= 1.0 + tol;
    let interpolates = max_residual <= tol;
    VerificationReport {
        sup_norm,
        bounded,
        residuals,
        max_residual,
        interpolates,
        real_type: f.has_real_coefficients(tol),
        pass: bounded && interpolates,
    }
}

/// Checks `|f| ≤ 1 + tol` on the circle grid and `|f(zⱼ) − wⱼ| ≤ tol`.
pub fn verify_interpolant(f: &(impl DiskFunction + ?Sized), problem: &InterpolationProblem, tol: f64) -> VerificationReport {
    let residuals = problem
        .nodes()
        .iter()
        .zip(problem.values())
        .map(|(&z, &w)| (f.value_at(z) - w).norm())
        .collect();
    finish(f, residuals, tol)
}

/// Checks `|f| ≤ 1 + tol` on the circle grid and the leading Taylor coefficients.
pub fn verify_taylor(f: &(impl DiskFunction + ?Sized), problem: &CfProblem, tol: f64) -> VerificationReport {
    let head = f.taylor_head(problem.taylor().len());
    let residuals = head.iter().zip(problem.taylor()).map(|(h, a)| (h - a).norm()).collect();
    finish(f, residuals, tol)
}
