use crate::error::{Error, Result};

/// Tolerances and resource caps governing every floating-point evaluation.
///
/// A single context is threaded through series summation, quadrature and root
/// refinement so that one knob controls the whole accuracy budget.
#[derive(Debug, Clone)]
pub struct PrecisionContext {
    /// Absolute tolerance for floating results.
    pub target_abs_tol: f64,
    /// Cap on the number of terms any series summation may take.
    pub max_series_terms: usize,
    /// Relative tolerance driving adaptive quadrature refinement.
    pub quad_rel_tol: f64,
    /// Total panel-subdivision budget per quadrature call.
    pub quad_max_refinements: usize,
    /// Residual tolerance |e^z - T_{N-1}(z)| at accepted roots.
    pub root_tol: f64,
}

impl Default for PrecisionContext {
    fn default() -> Self {
        PrecisionContext {
            target_abs_tol: 1e-10,
            max_series_terms: 40_000,
            quad_rel_tol: 1e-11,
            quad_max_refinements: 4_000,
            root_tol: 1e-12,
        }
    }
}

impl PrecisionContext {
    /// Check the structural invariants (all tolerances positive, sane caps).
    pub fn validate(&self) -> Result<()> {
        if !(self.target_abs_tol > 0.0 && self.quad_rel_tol > 0.0 && self.root_tol > 0.0) {
            return Err(Error::InvalidInput(
                "all tolerances must be strictly positive".into(),
            ));
        }
        if self.max_series_terms < 16 {
            return Err(Error::InvalidInput("max_series_terms must be >= 16".into()));
        }
        if self.quad_max_refinements == 0 {
            return Err(Error::InvalidInput(
                "quad_max_refinements must be positive".into(),
            ));
        }
        Ok(())
    }

    /// Context with a caller-chosen absolute tolerance, other knobs default.
    pub fn with_tol(tol: f64) -> Self {
        PrecisionContext {
            target_abs_tol: tol,
            ..Default::default()
        }
    }
}
