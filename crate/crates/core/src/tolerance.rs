use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Numerical thresholds shared by every module.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceConfig {
    /// Relative tolerance for equality checks.
    pub eq_tol: f64,
    /// Eigenvalue floor scale for positive-semidefiniteness tests.
    pub psd_tol: f64,
    /// Coefficient pruning threshold, relative to the largest coefficient.
    pub drop_tol: f64,
}

pub const DEFAULT_EQ_TOL: f64 = 1e-9;
pub const DEFAULT_PSD_TOL: f64 = 1e-9;
pub const DEFAULT_DROP_TOL: f64 = 1e-14;

impl Default for ToleranceConfig {
    fn default() -> Self {
        ToleranceConfig {
            eq_tol: DEFAULT_EQ_TOL,
            psd_tol: DEFAULT_PSD_TOL,
            drop_tol: DEFAULT_DROP_TOL,
        }
    }
}

impl ToleranceConfig {
    pub fn new(eq_tol: f64, psd_tol: f64, drop_tol: f64) -> Result<Self> {
        let cfg = ToleranceConfig {
            eq_tol,
            psd_tol,
            drop_tol,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if !positive(self.eq_tol) || !positive(self.psd_tol) || !positive(self.drop_tol) {
            return Err(Error::InvalidTolerance("all tolerances must be strictly positive"));
        }
        if self.eq_tol < self.drop_tol {
            return Err(Error::InvalidTolerance("eq_tol must be at least drop_tol"));
        }
        Ok(())
    }
}
