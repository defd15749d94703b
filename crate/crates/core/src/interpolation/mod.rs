//! Nevanlinna–Pick and Carathéodory–Fejér interpolation, classical and with
//! real coefficients.

mod cf;
mod nevanlinna;
mod pick;
mod problem;
mod verify;

pub use cf::{cf_solve, cf_toeplitz, CfProblem, CfSolution};
pub use nevanlinna::{np_solve, np_solve_real, RealInterpolant, REAL_TAYLOR_DEGREE};
pub use pick::{np_solvable_real, pick_matrix, ForcedRealBlock, PickReport};
pub use problem::{InterpolationProblem, NODE_GAP, REAL_TOL};
pub use verify::{verify_interpolant, verify_taylor, VerificationReport, VERIFY_GRID};
