use serde::Serialize;

use crate::error::{Error, Result};
use crate::factorization::BOUNDARY_EPS;
use crate::C64;

/// Minimum separation between interpolation nodes.
pub const NODE_GAP: f64 = 1e-10;

/// Absolute threshold on the imaginary part for a node or value to count as real.
pub const REAL_TOL: f64 = 1e-12;

pub(crate) fn is_real(z: C64) -> bool {
    z.im.abs() <= REAL_TOL
}

/// Nodes `z₁..zₙ` in the open disk with targets `w₁..wₙ`.
///
/// `r` counts real nodes and `s` the entries whose node and value are both
/// real. `permutation[k]` is the original index of the `k`-th entry in the
/// order (real node, real value), (real node, non-real value), non-real node.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InterpolationProblem {
    nodes: Vec<C64>,
    values: Vec<C64>,
    r: usize,
    s: usize,
    permutation: Vec<usize>,
    augmented: bool,
}

pub(crate) fn validate_nodes(nodes: &[C64], values: &[C64]) -> Result<()> {
    if nodes.len() != values.len() {
        return Err(Error::LengthMismatch { nodes: nodes.len(), values: values.len() });
    }
    for (index, z) in nodes.iter().enumerate() {
        if !z.is_finite() || z.norm() >= 1.0 - BOUNDARY_EPS {
            return Err(Error::NodeOnBoundary { index, modulus: z.norm() });
        }
    }
    if let Some(w) = values.iter().find(|w| !w.is_finite()) {
        return Err(Error::InvalidInput(format!("non-finite value {w}")));
    }
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            if (nodes[i] - nodes[j]).norm() <= NODE_GAP {
                return Err(Error::DuplicateNodes { first: i, second: j });
            }
        }
    }
    Ok(())
}

impl InterpolationProblem {
    pub fn new(nodes: Vec<C64>, values: Vec<C64>) -> Result<Self> {
        validate_nodes(&nodes, &values)?;
        Ok(Self::build(nodes, values, false))
    }

    fn build(nodes: Vec<C64>, values: Vec<C64>, augmented: bool) -> Self {
        let class = |i: usize| match (is_real(nodes[i]), is_real(values[i])) {
            (true, true) => 0,
            (true, false) => 1,
            _ => 2,
        };
        let mut permutation: Vec<usize> = (0..nodes.len()).collect();
        permutation.sort_by_key(|&i| class(i));
        let s = permutation.iter().filter(|&&i| class(i) == 0).count();
        let r = s + permutation.iter().filter(|&&i| class(i) == 1).count();
        InterpolationProblem { nodes, values, r, s, permutation, augmented }
    }

    pub fn nodes(&self) -> &[C64] {
        &self.nodes
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    pub fn is_augmented(&self) -> bool {
        self.augmented
    }

    /// Nodes and values in permuted order.
    pub fn ordered(&self) -> (Vec<C64>, Vec<C64>) {
        let nodes = self.permutation.iter().map(|&i| self.nodes[i]).collect();
        let values = self.permutation.iter().map(|&i| self.values[i]).collect();
        (nodes, values)
    }

    /// The real-coefficient problem as a classical one: the ordered list is
    /// extended by the real nodes `z_{s+1..r}` again and the conjugates of the
    /// non-real nodes, with targets `conj w_{s+1..n}`. Length `2n − s`.
    ///
    /// Augmenting twice returns the first augmentation unchanged.
    pub fn augment_real(&self) -> InterpolationProblem {
        if self.augmented {
            return self.clone();
        }
        let (mut nodes, mut values) = self.ordered();
        let n = nodes.len();
        for k in self.s..n {
            let z = nodes[k];
            nodes.push(if k < self.r { z } else { z.conj() });
            values.push(values[k].conj());
        }
        let mut out = Self::build(nodes, values, true);
        // Keep the augmented list in construction order.
        out.permutation = (0..out.nodes.len()).collect();
        out
    }
}
