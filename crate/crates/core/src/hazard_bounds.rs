//! Lower and upper bounds on `H(nu, x) = sum_{k >= 1} I_{nu+k}(x) / I_nu(x)`.
//!
//! Two families:
//!
//! * geometric bounds, valid for every `nu, x >= 0`, built from the Amos
//!   ratio bounds. At `nu = 0` they behave like a constant (lower) and like
//!   `x` (upper) as `x` grows.
//! * the two-regime bounds `L(nu, x)` and `U(nu, x)`, valid once
//!   `[nu] + 2 <= [x]`. They split `H` at index `[x] - [nu] - 1`; products of
//!   the exponential ratio bounds turn the head into a Gaussian partial sum,
//!   which is bracketed through the Gaussian tail inequality, and the tail is
//!   handled geometrically. Both scale like `sqrt(x)` near `nu = 0`.
//!
//! [`h_bounds`] reports the two-regime pair where it applies and the
//! geometric pair elsewhere, never mixing them.

use std::f64::consts::PI;

use crate::error::{check_nonneg, BoundsError, Result};
use crate::interval::Interval;
use crate::kernel::{kernel, one_minus_kernel};
use crate::point::EvalPoint;
use crate::ratio_bounds::ALPHA0;

/// `F(nu, x) = x / (nu + sqrt(nu^2 + x^2))`.
pub fn f_kernel(nu: f64, x: f64) -> Result<f64> {
    check_nonneg("nu", nu)?;
    check_nonneg("x", x)?;
    if nu == 0.0 && x == 0.0 {
        return Err(BoundsError::InvalidArgument {
            name: "x",
            value: x,
            reason: "F(0, 0) is 0/0",
        });
    }
    Ok(kernel(nu, x))
}

/// `[F(nu+1, x)(1 + F(nu+2, x)), F(nu+1/2, x) / (1 - F(nu+3/2, x))]`.
pub fn geometric_h_bounds(p: EvalPoint) -> Interval {
    let (nu, x) = (p.nu(), p.x());
    if x == 0.0 {
        return Interval::point(0.0);
    }
    let lower = kernel(nu + 1.0, x) * (1.0 + kernel(nu + 2.0, x));
    let upper = kernel(nu + 0.5, x) / one_minus_kernel(nu + 1.5, x);
    Interval::new(lower, upper)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `[nu] + 2 > [x]`: only the geometric bounds apply.
    GeometricOnly,
    /// `[nu] + 2 <= [x]`: `L` and `U` apply.
    TwoRegime,
}

impl Regime {
    pub fn of(p: EvalPoint) -> Regime {
        if p.nu_floor() + 2.0 <= p.x_floor() {
            Regime::TwoRegime
        } else {
            Regime::GeometricOnly
        }
    }
}

fn require_two_regime(p: EvalPoint, what: &str) -> Result<()> {
    match Regime::of(p) {
        Regime::TwoRegime => Ok(()),
        Regime::GeometricOnly => Err(BoundsError::Precondition(format!(
            "{what} needs [nu] + 2 <= [x], got nu = {}, x = {}",
            p.nu(),
            p.x()
        ))),
    }
}

/// The lower bound `L(nu, x)`, for `[nu] + 2 <= [x]`.
pub fn lower_h_bound(p: EvalPoint) -> Result<f64> {
    require_two_regime(p, "L(nu, x)")?;
    let (nu, x) = (p.nu(), p.x());
    let (nfl, nf, xfl) = (p.nu_floor(), p.nu_frac(), p.x_floor());

    let a = nu + 1.5;
    let gaussian_head = 2.0 * x * (-(nu + 1.0) / x).exp() / (a + (a * a + 4.0 * x).sqrt());

    let b = xfl + 1.5;
    let head_cutoff = 2.0 * x * (-(xfl - nu - nf + 1.0) * (xfl + nu - nf + 2.0) / (2.0 * x)).exp()
        / (b + (b * b + 8.0 * x / PI).sqrt());

    let c = xfl + nf;
    let tail = (-(xfl - nfl - 1.0) * (xfl + nu + nf) / (2.0 * x)).exp()
        * kernel(c, x)
        * (1.0 + kernel(c + 1.0, x));

    Ok(gaussian_head - head_cutoff + tail)
}

/// The upper bound `U(nu, x)`, for `[nu] + 2 <= [x]`.
pub fn upper_h_bound(p: EvalPoint) -> Result<f64> {
    require_two_regime(p, "U(nu, x)")?;
    let (nu, x) = (p.nu(), p.x());
    let (nfl, nf, xfl) = (p.nu_floor(), p.nu_frac(), p.x_floor());

    let gaussian_head = (2.0 * x / ALPHA0)
        * (1.0 / (nu + (nu * nu + 8.0 * x / (PI * ALPHA0)).sqrt())
            - (-ALPHA0 * (x * x - nu * nu) / (2.0 * x)).exp()
                / (x + (x * x + 4.0 * x / ALPHA0).sqrt()));

    let c = xfl + nf;
    let tail = (-ALPHA0 * (xfl - nfl - 1.0) * (xfl + nu + nf - 1.0) / (2.0 * x)).exp()
        * kernel(c - 0.5, x)
        / one_minus_kernel(c + 0.5, x);

    Ok(gaussian_head + tail)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HazardBoundReport {
    pub point: EvalPoint,
    pub interval: Interval,
    pub regime: Regime,
    /// The two-regime lower bound was negative and has been raised to 0.
    pub lower_clamped: bool,
}

/// Bounds on `H(nu, x)`: `[L, U]` when `[nu] + 2 <= [x]`, geometric otherwise.
pub fn h_bounds(p: EvalPoint) -> HazardBoundReport {
    let regime = Regime::of(p);
    let (interval, lower_clamped) = match regime {
        Regime::GeometricOnly => (geometric_h_bounds(p), false),
        Regime::TwoRegime => {
            let lower = lower_h_bound(p).expect("regime checked");
            let upper = upper_h_bound(p).expect("regime checked");
            if lower < 0.0 {
                log::debug!(
                    "clamping negative L(nu, x) = {lower:e} to 0 at nu = {}, x = {}",
                    p.nu(),
                    p.x()
                );
                (Interval::new(0.0, upper), true)
            } else {
                (Interval::new(lower, upper), false)
            }
        }
    };
    HazardBoundReport {
        point: p,
        interval,
        regime,
        lower_clamped,
    }
}

/// Intersection of the geometric and two-regime intervals where both apply.
/// Library convenience; the CLI presets use [`h_bounds`].
pub fn h_bounds_tightest(p: EvalPoint) -> Interval {
    let geometric = geometric_h_bounds(p);
    match Regime::of(p) {
        Regime::GeometricOnly => geometric,
        Regime::TwoRegime => {
            let two = h_bounds(p).interval;
            geometric.intersect(&two).unwrap_or(geometric)
        }
    }
}
