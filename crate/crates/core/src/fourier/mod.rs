//! Laurent polynomials on the unit circle and the grid bridge between
//! coefficients and samples.

mod grid;
mod poly;

pub use grid::{next_grid_size, GridFunction};
pub use poly::{FourierPoly, Norm, MIN_QUADRATURE_GRID};
