use nalgebra::DMatrix;
use serde::Serialize;

use super::problem::{is_real, validate_nodes, InterpolationProblem};
use crate::error::Result;
use crate::linalg::hermitian_eigenvalues;
use crate::tolerance::ToleranceConfig;
use crate::C64;

/// `[(1 − wᵢ·conj wⱼ) / (1 − zᵢ·conj zⱼ)]` after validating the nodes.
pub fn pick_matrix(nodes: &[C64], values: &[C64]) -> Result<DMatrix<C64>> {
    validate_nodes(nodes, values)?;
    Ok(pick_matrix_unchecked(nodes, values))
}

/// Same formula without the distinctness check; used for the augmented list,
/// which repeats real nodes on purpose.
pub(crate) fn pick_matrix_unchecked(nodes: &[C64], values: &[C64]) -> DMatrix<C64> {
    let n = nodes.len();
    let one = C64::new(1.0, 0.0);
    DMatrix::from_fn(n, n, |i, j| {
        (one - values[i] * values[j].conj()) / (one - nodes[i] * nodes[j].conj())
    })
}

/// 2×2 block of the augmented matrix at a real node carrying a non-real value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ForcedRealBlock {
    /// Index into the original problem.
    pub index: usize,
    pub node: C64,
    pub value: C64,
    pub determinant: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PickReport {
    /// Rows of the augmented Pick matrix.
    pub matrix: Vec<Vec<C64>>,
    pub min_eigenvalue: f64,
    /// `max(1, ‖P‖₂)`.
    pub scale: f64,
    /// `−psd_tol · scale`.
    pub threshold: f64,
    pub psd: bool,
    pub solvable: bool,
    pub forced_real_violations: Vec<usize>,
    pub forced_real_blocks: Vec<ForcedRealBlock>,
}

/// Solvability of the real-coefficient problem through the augmented Pick
/// matrix.
///
/// A real node with a non-real value makes the 2×2 block at the duplicated
/// node indefinite, so such entries are reported individually and always make
/// the problem unsolvable, however small the imaginary part.
pub fn np_solvable_real(problem: &InterpolationProblem, tol: &ToleranceConfig) -> PickReport {
    let aug = problem.augment_real();
    let p = pick_matrix_unchecked(aug.nodes(), aug.values());
    let (psd, min_eigenvalue, scale, threshold) = psd_test(&p, tol.psd_tol);

    let n = problem.len();
    let mut forced_real_blocks = Vec::new();
    if !problem.is_augmented() {
        for k in problem.s()..problem.r() {
            let partner = n + (k - problem.s());
            let det = (p[(k, k)] * p[(partner, partner)] - p[(k, partner)] * p[(partner, k)]).re;
            forced_real_blocks.push(ForcedRealBlock {
                index: problem.permutation()[k],
                node: aug.nodes()[k],
                value: aug.values()[k],
                determinant: det,
            });
        }
    } else {
        // Already augmented: duplicated real nodes carry conjugate values.
        for k in 0..aug.len() {
            for j in k + 1..aug.len() {
                if aug.nodes()[k] == aug.nodes()[j] && is_real(aug.nodes()[k]) && !is_real(aug.values()[k]) {
                    let det = (p[(k, k)] * p[(j, j)] - p[(k, j)] * p[(j, k)]).re;
                    forced_real_blocks.push(ForcedRealBlock {
                        index: k,
                        node: aug.nodes()[k],
                        value: aug.values()[k],
                        determinant: det,
                    });
                }
            }
        }
    }
    let forced_real_violations: Vec<usize> = forced_real_blocks.iter().map(|b| b.index).collect();
    PickReport {
        matrix: (0..p.nrows()).map(|i| p.row(i).iter().copied().collect()).collect(),
        min_eigenvalue,
        scale,
        threshold,
        psd,
        solvable: psd && forced_real_violations.is_empty(),
        forced_real_violations,
        forced_real_blocks,
    }
}

/// `(psd, λ_min, scale, threshold)` for a Hermitian matrix.
pub(crate) fn psd_test(p: &DMatrix<C64>, psd_tol: f64) -> (bool, f64, f64, f64) {
    let ev = hermitian_eigenvalues(p);
    let min = ev.first().copied().unwrap_or(0.0);
    let norm = ev.iter().map(|l| l.abs()).fold(0.0, f64::max);
    let scale = norm.max(1.0);
    let threshold = -psd_tol * scale;
    (min >= threshold, min, scale, threshold)
}
