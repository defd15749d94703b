//! Numerical toolkit for Hardy spaces of functions with real Fourier
//! coefficients, at finite truncation.
//!
//! Functions on the unit circle are finite Laurent series ([`FourierPoly`]).
//! The coefficient-conjugation involution `f*` and the projection
//! `Φ(f) = (f + f*)/2` onto real-coefficient functions drive everything else:
//!
//! - [`factorization`]: Blaschke products, conjugate functions, outer functions
//!   from boundary modulus, inner–outer and Riesz factorization with real
//!   symmetrization.
//! - [`interpolation`]: classical and real-coefficient Nevanlinna–Pick
//!   interpolation and the Carathéodory–Fejér problem.
//! - [`szego`]: weighted least-squares prediction error against the geometric
//!   mean of a weight.
//! - [`subspace`]: shift-invariant subspaces of truncated `H²` with real
//!   coefficients, Beurling recovery and the `z², z³`-invariant case.

pub mod error;
pub mod factorization;
pub mod fourier;
pub mod interpolation;
pub mod linalg;
pub mod subspace;
pub mod szego;
pub mod tolerance;

pub use error::{Error, Result};
pub use fourier::{FourierPoly, GridFunction, Norm};
pub use num_complex::Complex64;
pub use tolerance::ToleranceConfig;

/// Shorthand used throughout the crate.
pub type C64 = Complex64;
