//! Closed-form envelopes for the Bessel ratio `I_{nu+1}(x) / I_nu(x)`.
//!
//! The Amos bounds are algebraic and hold for all `nu, x >= 0`. Weakening
//! `sqrt(1 + t^2) - t` to exponentials on `t in [0, 1]` turns them into the
//! exponential bounds of [`exp_ratio_bounds`], valid when `nu + 1 <= x`;
//! products of those telescope into Gaussians, which is what the hazard
//! bounds rely on.

use crate::error::{check_nonneg, BoundsError, Result};
use crate::interval::Interval;
use crate::kernel::kernel;
use crate::point::EvalPoint;

/// `-ln(sqrt(2) - 1) = ln(1 + sqrt(2)) = asinh(1)`: the largest rate `a`
/// with `sqrt(1 + t^2) - t <= exp(-a t)` on all of `[0, 1]`.
pub const ALPHA0: f64 = 0.881_373_587_019_543_025;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundConstants {
    pub alpha0: f64,
}

impl Default for BoundConstants {
    fn default() -> Self {
        BoundConstants { alpha0: ALPHA0 }
    }
}

/// `sqrt(1 + t^2) - t`, evaluated as `1 / (t + sqrt(1 + t^2))`.
pub fn sqrt_surrogate(t: f64) -> Result<f64> {
    check_nonneg("t", t)?;
    Ok(1.0 / (t + t.hypot(1.0)))
}

/// `1 - (sqrt(1 + t^2) - t)` without cancellation near `t = 0`.
pub fn one_minus_sqrt_surrogate(t: f64) -> Result<f64> {
    check_nonneg("t", t)?;
    let root = t.hypot(1.0);
    Ok((t + t * t / (root + 1.0)) / (t + root))
}

/// `[exp(-t), exp(-ALPHA0 t)]`, which brackets `sqrt(1 + t^2) - t` on `[0, 1]`.
pub fn best_exponential_bounds(t: f64) -> Result<Interval> {
    check_nonneg("t", t)?;
    if t > 1.0 {
        return Err(BoundsError::InvalidArgument {
            name: "t",
            value: t,
            reason: "exponential envelope holds only on [0, 1]",
        });
    }
    Ok(Interval::new((-t).exp(), (-ALPHA0 * t).exp()))
}

/// Amos bounds `[x / (nu + 1 + sqrt(x^2 + (nu+1)^2)), x / (nu + 1/2 + sqrt(x^2 + (nu+1/2)^2))]`.
pub fn amos_ratio_bounds(p: EvalPoint) -> Interval {
    let (nu, x) = (p.nu(), p.x());
    if x == 0.0 {
        return Interval::point(0.0);
    }
    Interval::new(kernel(nu + 1.0, x), kernel(nu + 0.5, x))
}

/// The sharper Amos lower bound `x / (nu + 1/2 + sqrt(x^2 + (nu + 3/2)^2))`.
/// Not used by any derived bound; kept as an independent cross-check.
pub fn amos_sharp_lower(p: EvalPoint) -> f64 {
    let (nu, x) = (p.nu(), p.x());
    if x == 0.0 {
        return 0.0;
    }
    x / (nu + 0.5 + x.hypot(nu + 1.5))
}

/// `[exp(-(nu+1)/x), exp(-ALPHA0 (nu + 1/2) / x)]`, requiring `nu + 1 <= x`.
pub fn exp_ratio_bounds(p: EvalPoint) -> Result<Interval> {
    let (nu, x) = (p.nu(), p.x());
    if nu + 1.0 > x {
        return Err(BoundsError::Precondition(format!(
            "exponential ratio bounds need nu + 1 <= x, got nu = {nu}, x = {x}"
        )));
    }
    Ok(Interval::new(
        (-(nu + 1.0) / x).exp(),
        (-ALPHA0 * (nu + 0.5) / x).exp(),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioBranch {
    Exponential,
    Amos,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CombinedRatioBounds {
    pub interval: Interval,
    pub branch: RatioBranch,
}

/// Exponential bounds where `nu + 1 <= x`, Amos bounds elsewhere.
pub fn combined_ratio_bounds(p: EvalPoint) -> CombinedRatioBounds {
    match exp_ratio_bounds(p) {
        Ok(interval) => CombinedRatioBounds {
            interval,
            branch: RatioBranch::Exponential,
        },
        Err(_) => CombinedRatioBounds {
            interval: amos_ratio_bounds(p),
            branch: RatioBranch::Amos,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::bessel_ratio;
    use proptest::prelude::*;
    use std::f64::consts::SQRT_2;

    fn pt(nu: f64, x: f64) -> EvalPoint {
        EvalPoint::new(nu, x).unwrap()
    }

    fn oracle(nu: f64, x: f64) -> f64 {
        bessel_ratio(pt(nu, x), 1e-15).unwrap().value()
    }

    #[test]
    fn alpha0_fidelity() {
        assert!(((-ALPHA0).exp() - (SQRT_2 - 1.0)).abs() <= 1e-15);
        assert!((ALPHA0 - (1.0 + SQRT_2).ln()).abs() <= 2e-16);
        assert_eq!(BoundConstants::default().alpha0, ALPHA0);
    }

    #[test]
    fn surrogate_values() {
        assert_eq!(sqrt_surrogate(0.0).unwrap(), 1.0);
        assert!((sqrt_surrogate(1.0).unwrap() - (SQRT_2 - 1.0)).abs() < 1e-16);
        // 4.999999999999999875e-9; the naive difference returns 0 here
        let v = sqrt_surrogate(1e8).unwrap();
        assert!(((v - 4.999_999_999_999_999_875e-9) / v).abs() < 1e-15);
        assert_eq!((1.0f64 + 1e16).sqrt() - 1e8, 0.0);
        assert!(sqrt_surrogate(-0.1).is_err());
        assert_eq!(one_minus_sqrt_surrogate(0.0).unwrap(), 0.0);
        // 1 - f(1e-6) = 9.999995000000000000e-7 to 19 digits
        let d = one_minus_sqrt_surrogate(1e-6).unwrap();
        assert!((d - 9.999_995e-7).abs() / d < 1e-15);
    }

    #[test]
    fn exponential_envelope_endpoints() {
        let iv = best_exponential_bounds(0.0).unwrap();
        assert_eq!((iv.lower, iv.upper), (1.0, 1.0));
        let iv = best_exponential_bounds(1.0).unwrap();
        assert!((iv.lower - (-1.0f64).exp()).abs() < 1e-16);
        assert!((iv.upper - (SQRT_2 - 1.0)).abs() < 1e-15);
        let iv = best_exponential_bounds(0.5).unwrap();
        assert!(iv.contains(1.25f64.sqrt() - 0.5));
        assert!(best_exponential_bounds(1.01).is_err());
        assert!(best_exponential_bounds(-0.01).is_err());
    }

    #[test]
    fn rates_are_optimal() {
        // any faster upper rate fails at t = 1
        assert!((-(ALPHA0 + 1e-3)).exp() < SQRT_2 - 1.0);
        // any slower lower rate fails near t = 0
        let t: f64 = 1e-3;
        assert!((-(1.0 - 1e-3) * t).exp() > sqrt_surrogate(t).unwrap());
    }

    #[test]
    fn amos_at_zero_and_substitution() {
        assert_eq!(amos_ratio_bounds(pt(7.0, 0.0)), Interval::point(0.0));
        let iv = amos_ratio_bounds(pt(0.0, 100.0));
        assert!((iv.lower - 100.0 / (1.0 + 10_001f64.sqrt())).abs() < 1e-15);
        assert!((iv.upper - 100.0 / (0.5 + 10_000.25f64.sqrt())).abs() < 1e-15);
        assert!(iv.contains(oracle(0.0, 100.0)));
        assert!(amos_ratio_bounds(pt(10.0, 10.0)).contains(oracle(10.0, 10.0)));
    }

    #[test]
    fn exp_bounds_preconditions() {
        let iv = exp_ratio_bounds(pt(0.0, 1.0)).unwrap();
        assert!((iv.lower - (-1.0f64).exp()).abs() < 1e-16);
        assert!((iv.upper - (-ALPHA0 / 2.0).exp()).abs() < 1e-16);
        assert!(exp_ratio_bounds(pt(99.0, 100.0)).is_ok());
        assert!(matches!(
            exp_ratio_bounds(pt(99.5, 100.0)),
            Err(BoundsError::Precondition(_))
        ));
        let e = exp_ratio_bounds(pt(0.0, 100.0)).unwrap();
        let a = amos_ratio_bounds(pt(0.0, 100.0));
        let r = oracle(0.0, 100.0);
        assert!(e.contains(r) && a.contains(r));
        assert!(e.width() > a.width());
    }

    #[test]
    fn dispatcher_branches() {
        assert_eq!(
            combined_ratio_bounds(pt(0.0, 100.0)).branch,
            RatioBranch::Exponential
        );
        assert_eq!(
            combined_ratio_bounds(pt(120.0, 100.0)).branch,
            RatioBranch::Amos
        );
        let c = combined_ratio_bounds(pt(3.0, 0.0));
        assert_eq!(c.interval, Interval::point(0.0));
        assert_eq!(c.branch, RatioBranch::Amos);
    }

    #[test]
    fn sharp_lower_is_between() {
        for &(nu, x) in &[(0.0, 1.0), (4.5, 30.0), (80.0, 20.0)] {
            let p = pt(nu, x);
            let r = oracle(nu, x);
            let sharp = amos_sharp_lower(p);
            assert!(sharp <= r * (1.0 + 1e-12));
            assert!(sharp >= amos_ratio_bounds(p).lower);
        }
    }

    proptest! {
        #[test]
        fn envelope_brackets_surrogate(t in 0.0f64..=1.0) {
            // near t = 0 the three values agree to within an ulp of 1, so the
            // comparison runs on their distances from 1
            let d = one_minus_sqrt_surrogate(t).unwrap();
            prop_assert!(-(-ALPHA0 * t).exp_m1() <= d && d <= -(-t).exp_m1());
            let direct = sqrt_surrogate(t).unwrap();
            prop_assert!(((1.0 - d) - direct).abs() <= 2.0 * f64::EPSILON);
        }

        #[test]
        fn amos_and_combined_bracket_the_ratio(nu in 0.0f64..300.0, x in 0.0f64..300.0) {
            let p = pt(nu, x);
            let r = oracle(nu, x);
            prop_assert!(amos_ratio_bounds(p).contains_with_slack(r, 1e-12));
            prop_assert!(combined_ratio_bounds(p).interval.contains_with_slack(r, 1e-12));
            prop_assert!((0.0..1.0).contains(&r));
        }
    }
}
