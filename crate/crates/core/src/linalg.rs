//! Small dense linear-algebra helpers on top of nalgebra.

use nalgebra::{DMatrix, DVector, Schur};

use crate::C64;

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(m: &DMatrix<C64>) -> Vec<f64> {
    if m.is_empty() {
        return Vec::new();
    }
    let mut ev: Vec<f64> = m.clone().symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Largest singular value.
pub fn spectral_norm(m: &DMatrix<C64>) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    m.clone()
        .svd(false, false)
        .singular_values
        .iter()
        .copied()
        .fold(0.0, f64::max)
}

/// Largest absolute entry.
pub fn max_abs_entry(m: &DMatrix<C64>) -> f64 {
    m.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// Roots of `Σ aₖ zᵏ` (ascending coefficients) from the eigenvalues of the
/// companion matrix, each refined by a few Newton steps on the original
/// polynomial. Falls back to Aberth iteration when the Schur iteration does
/// not converge.
pub fn poly_roots(coeffs: &[C64]) -> Vec<C64> {
    let mut deg = coeffs.len();
    while deg > 0 && coeffs[deg - 1] == C64::new(0.0, 0.0) {
        deg -= 1;
    }
    if deg <= 1 {
        return Vec::new();
    }
    let d = deg - 1;
    let lead = coeffs[d];
    let mut comp = DMatrix::<C64>::zeros(d, d);
    for i in 1..d {
        comp[(i, i - 1)] = C64::new(1.0, 0.0);
    }
    for i in 0..d {
        comp[(i, d - 1)] = -coeffs[i] / lead;
    }
    balance(&mut comp);
    let eig = match Schur::try_new(comp, f64::EPSILON, 200 * d) {
        Some(schur) => schur.eigenvalues().map(|e| e.iter().copied().collect()),
        None => None,
    };
    let eig = eig.unwrap_or_else(|| aberth(&coeffs[..deg]));
    eig.iter()
        .map(|&r| newton_polish(&coeffs[..deg], r))
        .collect()
}

/// Parlett–Reinsch balancing: a diagonal similarity by powers of two that
/// equalizes row and column norms, so eigenvalues of badly scaled matrices
/// keep their relative accuracy.
fn balance(m: &mut DMatrix<C64>) {
    let n = m.nrows();
    let mut converged = false;
    while !converged {
        converged = true;
        for i in 0..n {
            let col: f64 = (0..n).filter(|&k| k != i).map(|k| m[(k, i)].l1_norm()).sum();
            let row: f64 = (0..n).filter(|&k| k != i).map(|k| m[(i, k)].l1_norm()).sum();
            if col == 0.0 || row == 0.0 {
                continue;
            }
            let mut f = 1.0;
            let (mut c, mut r) = (col, row);
            while c < r / 2.0 {
                c *= 2.0;
                r /= 2.0;
                f *= 2.0;
            }
            while c >= r * 2.0 {
                c /= 2.0;
                r *= 2.0;
                f /= 2.0;
            }
            if (c + r) < 0.95 * (col + row) {
                converged = false;
                for k in 0..n {
                    m[(i, k)] /= f;
                    m[(k, i)] *= f;
                }
            }
        }
    }
}

/// Simultaneous Aberth–Ehrlich iteration from points on a circle whose radius
/// is the geometric mean of the root moduli.
fn aberth(coeffs: &[C64]) -> Vec<C64> {
    let d = coeffs.len() - 1;
    let radius = (coeffs[0].norm() / coeffs[d].norm()).powf(1.0 / d as f64).max(1e-3);
    let mut z: Vec<C64> = (0..d)
        .map(|k| C64::from_polar(radius, std::f64::consts::TAU * (k as f64 + 0.25) / d as f64))
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for k in 0..d {
            let (p, dp) = horner_with_derivative(coeffs, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: C64 = (0..d).filter(|&j| j != k).map(|j| C64::new(1.0, 0.0) / (z[k] - z[j])).sum();
            let step = ratio / (C64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                moved = moved.max(step.norm() / z[k].norm().max(1.0));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

fn horner_with_derivative(coeffs: &[C64], z: C64) -> (C64, C64) {
    let mut p = C64::new(0.0, 0.0);
    let mut dp = C64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

fn newton_polish(coeffs: &[C64], mut root: C64) -> C64 {
    let (mut val, _) = horner_with_derivative(coeffs, root);
    for _ in 0..4 {
        let (p, dp) = horner_with_derivative(coeffs, root);
        if dp.norm() == 0.0 {
            break;
        }
        let next = root - p / dp;
        let (next_val, _) = horner_with_derivative(coeffs, next);
        if !next.is_finite() || next_val.norm() >= val.norm() {
            break;
        }
        root = next;
        val = next_val;
    }
    root
}

/// Least-norm solution of `G x = b` for real symmetric positive semidefinite
/// `G`, discarding eigenvalues below `rel_cutoff · λ_max`.
pub fn symmetric_pinv_solve(g: &DMatrix<f64>, b: &DVector<f64>, rel_cutoff: f64) -> DVector<f64> {
    let eig = g.clone().symmetric_eigen();
    let lmax = eig.eigenvalues.iter().copied().fold(0.0, f64::max);
    let cutoff = rel_cutoff * lmax;
    let proj = eig.eigenvectors.transpose() * b;
    let scaled = DVector::from_iterator(
        proj.len(),
        proj.iter()
            .zip(eig.eigenvalues.iter())
            .map(|(&p, &l)| if l > cutoff { p / l } else { 0.0 }),
    );
    &eig.eigenvectors * scaled
}

/// Complex Hermitian counterpart of [`symmetric_pinv_solve`].
pub fn hermitian_pinv_solve(g: &DMatrix<C64>, b: &DVector<C64>, rel_cutoff: f64) -> DVector<C64> {
    let eig = g.clone().symmetric_eigen();
    let lmax = eig.eigenvalues.iter().copied().fold(0.0, f64::max);
    let cutoff = rel_cutoff * lmax;
    let proj = eig.eigenvectors.adjoint() * b;
    let scaled = DVector::from_iterator(
        proj.len(),
        proj.iter()
            .zip(eig.eigenvalues.iter())
            .map(|(&p, &l)| if l > cutoff { p / l } else { C64::new(0.0, 0.0) }),
    );
    &eig.eigenvectors * scaled
}

/// Modified Gram–Schmidt with one re-orthogonalization pass. A candidate is
/// dropped when its residual norm falls to `drop · (original norm)` or below.
pub fn orthonormalize(candidates: &[DVector<f64>], drop: f64) -> Vec<DVector<f64>> {
    let mut basis: Vec<DVector<f64>> = Vec::new();
    for v in candidates {
        let norm0 = v.norm();
        if norm0 == 0.0 {
            continue;
        }
        let mut r = v.clone();
        for _ in 0..2 {
            for q in &basis {
                let proj = q.dot(&r);
                r.axpy(-proj, q, 1.0);
            }
        }
        let nr = r.norm();
        if nr > drop * norm0 {
            basis.push(r / nr);
        }
    }
    basis
}

/// Orthonormal basis of `{x : A x = 0}` using the SVD; singular values below
/// `tol · max(1, σ_max)` count as zero.
pub fn null_space(a: &DMatrix<f64>, tol: f64) -> Vec<DVector<f64>> {
    let ncols = a.ncols();
    if a.nrows() == 0 {
        return (0..ncols)
            .map(|j| {
                let mut e = DVector::zeros(ncols);
                e[j] = 1.0;
                e
            })
            .collect();
    }
    // Pad to at least as many rows as columns so the SVD returns a full V.
    let rows = a.nrows().max(ncols);
    let mut padded = DMatrix::<f64>::zeros(rows, ncols);
    padded.view_mut((0, 0), (a.nrows(), ncols)).copy_from(a);
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("requested V");
    let smax = svd.singular_values.iter().copied().fold(0.0, f64::max);
    let cutoff = tol * smax.max(1.0);
    svd.singular_values
        .iter()
        .enumerate()
        .filter(|(_, &s)| s <= cutoff)
        .map(|(i, _)| v_t.row(i).transpose())
        .collect()
}
