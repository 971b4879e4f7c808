use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    #[error("invalid argument {name} = {value}: {reason}")]
    InvalidArgument {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// A hypothesis of the bound being evaluated does not hold at this point.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{routine} did not converge after {iterations} iterations")]
    NonConvergence {
        routine: &'static str,
        iterations: usize,
    },

    #[error(
        "Skellam tail oracle requires equal rates, got lambda1 = {lambda1}, lambda2 = {lambda2}"
    )]
    AsymmetricParameters { lambda1: f64, lambda2: f64 },
}

pub type Result<T> = std::result::Result<T, BoundsError>;

pub(crate) fn check_nonneg(name: &'static str, value: f64) -> Result<f64> {
    if !value.is_finite() {
        return Err(BoundsError::InvalidArgument {
            name,
            value,
            reason: "must be finite",
        });
    }
    if value < 0.0 {
        return Err(BoundsError::InvalidArgument {
            name,
            value,
            reason: "must be non-negative",
        });
    }
    Ok(value)
}

pub(crate) fn check_positive(name: &'static str, value: f64) -> Result<f64> {
    if !(value.is_finite() && value > 0.0) {
        return Err(BoundsError::InvalidArgument {
            name,
            value,
            reason: "must be finite and strictly positive",
        });
    }
    Ok(value)
}
