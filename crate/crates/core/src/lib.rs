//! Certified numerical bounds for modified Bessel functions of the first kind.
//!
//! The crate is split into four layers:
//!
//! * [`special`] holds high-precision reference evaluations (scaled Bessel
//!   values, Bessel ratios, the hazard-type sum `H(nu, x)`, log-gamma, Beta,
//!   Gaussian tail bounds and exact Skellam tails). These are the oracles every
//!   bound is checked against.
//! * [`ratio_bounds`] gives closed-form envelopes for `I_{nu+1}(x) / I_nu(x)`.
//! * [`hazard_bounds`] gives lower and upper bounds on
//!   `H(nu, x) = sum_{k >= 1} I_{nu+k}(x) / I_nu(x)`.
//! * [`skellam`] applies those bounds to `exp(-x) I_nu(x)` and to the
//!   Skellam distribution.
//!
//! Every function is pure; nothing here holds shared state.

#![allow(clippy::excessive_precision)]

pub mod error;
pub mod hazard_bounds;
pub mod interval;
mod kernel;
pub mod point;
pub mod ratio_bounds;
pub mod skellam;
pub mod special;

pub use error::{BoundsError, Result};
pub use hazard_bounds::{
    f_kernel, geometric_h_bounds, h_bounds, h_bounds_tightest, lower_h_bound, upper_h_bound,
    HazardBoundReport, Regime,
};
pub use interval::Interval;
pub use point::EvalPoint;
pub use ratio_bounds::{
    amos_ratio_bounds, amos_sharp_lower, best_exponential_bounds, combined_ratio_bounds,
    exp_ratio_bounds, one_minus_sqrt_surrogate, sqrt_surrogate, BoundConstants,
    CombinedRatioBounds, RatioBranch, ALPHA0,
};
pub use skellam::{
    concentration_bounds, scaled_bessel_bounds_int, skellam_hazard_bounds, skellam_log_pmf,
    skellam_pmf_bounds, ConcentrationReport, HazardSource, ScaledBesselBounds, SkellamParams,
};
pub use special::{
    bessel_ratio, beta_fn, gaussian_tail_bounds, hazard_partial_sum, hazard_sum_oracle, ln_beta,
    log_gamma, scaled_bessel_i, skellam_tail_oracle, RatioValue, ScaledBessel,
    TruncationCertificate, DEFAULT_TOL,
};
