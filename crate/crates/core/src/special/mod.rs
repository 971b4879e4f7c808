//! Reference evaluations used as ground truth for every bound in the crate.

mod bessel;
mod gamma;
mod gauss;
mod hazard;
mod ratio;
mod skellam_tail;

pub use bessel::{scaled_bessel_i, scaled_bessel_series_partial, ScaledBessel};
pub use gamma::{beta_fn, ln_beta, log_gamma};
pub use gauss::gaussian_tail_bounds;
pub use hazard::{hazard_partial_sum, hazard_sum_oracle};
pub use ratio::{bessel_ratio, RatioValue};
pub use skellam_tail::skellam_tail_oracle;

pub(crate) use gamma::ln_gamma_unchecked;

/// Library default tolerance for the oracles.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Term count and a bound on what a truncated sum discarded.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationCertificate {
    pub terms_used: usize,
    pub tail_bound: f64,
    pub requested_tol: f64,
}

impl TruncationCertificate {
    /// For values that needed no summation at all.
    pub(crate) fn exact(requested_tol: f64) -> Self {
        TruncationCertificate {
            terms_used: 0,
            tail_bound: 0.0,
            requested_tol,
        }
    }

    pub fn is_satisfied(&self) -> bool {
        self.tail_bound <= self.requested_tol
    }
}
