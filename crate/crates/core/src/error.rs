use thiserror::Error;

/// Errors raised by the numerical routines.
///
/// `Domain` and `Regime` are input problems (the CLI maps both to exit
/// status 3); the remaining variants report numerical failures.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("regime error: {0}")]
    Regime(String),

    #[error("quadrature did not converge: estimate {estimate:e}, error {error:e} > tolerance {tolerance:e}")]
    QuadratureBudget {
        estimate: f64,
        error: f64,
        tolerance: f64,
    },

    #[error("derivative unstable: Richardson levels {coarse:e} and {fine:e} differ by {relative:e} (relative)")]
    DerivativeInstability {
        coarse: f64,
        fine: f64,
        relative: f64,
    },

    #[error("integration did not converge: {0}")]
    NonConvergence(String),

    #[error("phase fit rejected: residual {residual:e} above {threshold:e}")]
    FitResidual { residual: f64, threshold: f64 },

    #[error("inconsistent result: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_positive(name: &str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must be positive and finite, got {value}")))
    }
}
