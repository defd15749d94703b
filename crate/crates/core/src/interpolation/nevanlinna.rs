use serde::Serialize;

use super::pick::{np_solvable_real, pick_matrix, psd_test, PickReport};
use super::problem::{InterpolationProblem, NODE_GAP};
use super::verify::VERIFY_GRID;
use crate::error::{Error, Result};
use crate::factorization::{DiskFunction, RationalDiskFunction};
use crate::fourier::FourierPoly;
use crate::tolerance::ToleranceConfig;
use crate::C64;

/// Taylor degree used when a rational interpolant is handed out as a polynomial.
pub const REAL_TAYLOR_DEGREE: usize = 128;

/// Classical Nevanlinna–Pick interpolation by the Nevanlinna recursion.
///
/// Each step removes one node `a` with target `w`: the remaining targets are
/// mapped through the disk automorphism sending `w` to 0 and divided by the
/// Blaschke factor at `a`. The pivot is the target of smallest modulus. When a
/// reduced target reaches modulus one (within `psd_tol`) the solution is
/// unique and the recursion closes with that unimodular constant; otherwise it
/// ends with `f ≡ 0`. Unwinding `f = (φₐ·g + w)/(1 + w̄·φₐ·g)` gives a
/// rational function of degree at most `n`.
pub fn np_solve(nodes: &[C64], values: &[C64], tol: &ToleranceConfig) -> Result<RationalDiskFunction> {
    let p = pick_matrix(nodes, values)?;
    let (psd, min_eigenvalue, _, _) = psd_test(&p, tol.psd_tol);
    if !psd {
        return Err(Error::NotSolvable { min_eigenvalue });
    }

    let one = C64::new(1.0, 0.0);
    let mut zs = nodes.to_vec();
    let mut ws = values.to_vec();
    let mut steps: Vec<(C64, C64)> = Vec::with_capacity(zs.len());
    let mut terminal = C64::new(0.0, 0.0);
    while !zs.is_empty() {
        let (top, top_abs) = ws
            .iter()
            .enumerate()
            .map(|(i, w)| (i, w.norm()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        if top_abs >= 1.0 - tol.psd_tol {
            terminal = ws[top] / top_abs;
            break;
        }
        let k = ws
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
            .map(|(i, _)| i)
            .unwrap();
        let a = zs.remove(k);
        let w = ws.remove(k);
        for (z, v) in zs.iter().zip(ws.iter_mut()) {
            let blaschke = (z - a) / (one - a.conj() * z);
            *v = (*v - w) / (one - w.conj() * *v) / blaschke;
        }
        steps.push((a, w));
    }

    let mut num = FourierPoly::constant(terminal);
    let mut den = FourierPoly::one();
    for &(a, w) in steps.iter().rev() {
        let p = FourierPoly::from_dense(0, &[-a, one]);
        let q = FourierPoly::from_dense(0, &[one, -a.conj()]);
        let pn = &p * &num;
        let qd = &q * &den;
        num = &pn + &qd.scale(w);
        den = &qd + &pn.scale(w.conj());
    }
    Ok(RationalDiskFunction::from_parts(num, den))
}

/// Real-coefficient interpolant together with the classical solution it was
/// symmetrized from.
#[derive(Debug, Clone, Serialize)]
pub struct RealInterpolant {
    /// Classical solution of the augmented, de-duplicated problem.
    pub classical: RationalDiskFunction,
    /// `Φ(classical)` in exact rational form.
    pub rational: RationalDiskFunction,
    /// `Φ` applied to the Taylor coefficients of `classical` up to
    /// [`REAL_TAYLOR_DEGREE`].
    pub taylor: FourierPoly,
    /// `max |rational − taylor|` on the verification grid.
    pub truncation_error: f64,
    pub report: PickReport,
}

/// Real-coefficient Nevanlinna–Pick interpolation.
///
/// The augmented problem is solved classically after dropping repeated nodes,
/// and `g(z) = (f(z) + conj f(conj z))/2` is formed exactly. Since the
/// augmented data is closed under conjugation, `g` still interpolates.
pub fn np_solve_real(problem: &InterpolationProblem, tol: &ToleranceConfig) -> Result<RealInterpolant> {
    let report = np_solvable_real(problem, tol);
    if !report.solvable {
        return Err(Error::NotSolvable { min_eigenvalue: report.min_eigenvalue });
    }
    let aug = problem.augment_real();
    let mut nodes: Vec<C64> = Vec::new();
    let mut values: Vec<C64> = Vec::new();
    for (&z, &w) in aug.nodes().iter().zip(aug.values()) {
        match nodes.iter().position(|y| (y - z).norm() <= NODE_GAP) {
            Some(i) if (values[i] - w).norm() > tol.eq_tol => {
                return Err(Error::NotSolvable { min_eigenvalue: report.min_eigenvalue });
            }
            Some(_) => {}
            None => {
                nodes.push(z);
                values.push(w);
            }
        }
    }
    let classical = np_solve(&nodes, &values, tol)?;
    let rational = classical.phi();
    let taylor = classical.taylor(REAL_TAYLOR_DEGREE).phi();
    let exact = rational.boundary_samples(VERIFY_GRID);
    let approx = taylor.samples(VERIFY_GRID);
    let truncation_error = exact
        .samples()
        .iter()
        .zip(approx.samples())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    Ok(RealInterpolant { classical, rational, taylor, truncation_error, report })
}
