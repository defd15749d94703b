//! Shift-invariant subspaces of truncated `H²` with real coefficients.
//!
//! A subspace is generated inside the polynomials of degree `< N` and kept as
//! an orthonormal basis of real coefficient vectors. Everything is compared
//! below the safe degree, where truncating the shift cannot interfere.

mod basis;
mod classify;

pub use basis::{generate_invariant, subspace_distance, ShiftPowers, SubspaceBasis, GS_DROP};
pub use classify::{classify, model_complement, wandering_vector, ClassificationResult, Form, UNDETERMINED_FIT};
