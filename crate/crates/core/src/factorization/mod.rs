//! Blaschke products, harmonic conjugates, outer functions and the
//! inner–outer and Riesz factorizations, with real symmetrization for
//! real-coefficient inputs.

mod blaschke;
mod inner_outer;
mod outer;
mod rational;

pub use blaschke::{blaschke_product, BOUNDARY_EPS};
pub use inner_outer::{
    canonical_sign_flip, inner_outer, riesz_factorize, riesz_truncation_degree, FactorizationResult,
    RieszFactorization,
};
pub use outer::{conjugate_function, outer_defect, outer_from_modulus, MODULUS_FLOOR};
pub use rational::{from_roots, DiskFunction, RationalDiskFunction};
