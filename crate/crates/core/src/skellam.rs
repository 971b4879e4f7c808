//! Skellam distribution and the applications of the hazard bounds:
//! two-sided bounds on `exp(-x) I_nu(x)` for integer `nu`, on the Skellam
//! mass function, on the hazard function and on `P[|W| > nu]`.
//!
//! Everything is carried in log space and exponentiated only on return.

use crate::error::{check_nonneg, check_positive, BoundsError, Result};
use crate::hazard_bounds::{h_bounds, HazardBoundReport, Regime};
use crate::interval::Interval;
use crate::point::EvalPoint;
use crate::ratio_bounds::ALPHA0;
use crate::special::{ln_beta, ln_gamma_unchecked, scaled_bessel_i, DEFAULT_TOL};

/// Rates `(lambda1, lambda2)` of `W = X1 - X2`, `Xi ~ Poisson(lambda_i)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SkellamParams {
    lambda1: f64,
    lambda2: f64,
}

impl SkellamParams {
    pub fn new(lambda1: f64, lambda2: f64) -> Result<Self> {
        check_positive("lambda1", lambda1)?;
        check_positive("lambda2", lambda2)?;
        Ok(SkellamParams { lambda1, lambda2 })
    }

    pub fn symmetric(lambda: f64) -> Result<Self> {
        SkellamParams::new(lambda, lambda)
    }

    pub fn lambda1(&self) -> f64 {
        self.lambda1
    }

    pub fn lambda2(&self) -> f64 {
        self.lambda2
    }

    /// Bessel argument `2 sqrt(lambda1 lambda2)`.
    pub fn x(&self) -> f64 {
        2.0 * (self.lambda1 * self.lambda2).sqrt()
    }

    /// `ln[(lambda1/lambda2)^(n/2) exp(-(lambda1 + lambda2) + x)]`, the factor
    /// taking `exp(-x) I_|n|(x)` to `P[W = n]`.
    fn log_mass_factor(&self, n: i64) -> f64 {
        let d = self.lambda1.sqrt() - self.lambda2.sqrt();
        0.5 * n as f64 * (self.lambda1.ln() - self.lambda2.ln()) - d * d
    }
}

/// `ln P[W = n]`.
pub fn skellam_log_pmf(params: SkellamParams, n: i64) -> Result<f64> {
    let p = EvalPoint::new(n.unsigned_abs() as f64, params.x())?;
    let (sb, _) = scaled_bessel_i(p, DEFAULT_TOL)?;
    Ok(params.log_mass_factor(n) + sb.log_value)
}

/// Which bracket on `H(0, x)` fed the normalisation `exp(-x) I_0(x) = 1 / (1 + 2 H(0, x))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HazardSource {
    /// `[L(0, x), U(0, x)]`, available for `[x] >= 2`.
    TwoRegime,
    /// Geometric bounds, used for `[x] < 2`.
    GeometricFallback,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledBesselBounds {
    pub interval: Interval,
    pub source: HazardSource,
}

/// Bounds on `exp(-x) I_nu(x)` for integer `nu`.
///
/// `exp(-x) I_0(x)` is bracketed through the normalisation of
/// `Skellam(x/2, x/2)`; the first `min(nu, [x])` ratios use the exponential
/// ratio bounds and any remaining ones use Amos-type bounds whose products
/// are Beta functions.
pub fn scaled_bessel_bounds_int(nu: u64, x: f64) -> Result<ScaledBesselBounds> {
    check_nonneg("x", x)?;
    let h0 = h_bounds(EvalPoint::new(0.0, x)?);
    let source = match h0.regime {
        Regime::TwoRegime => HazardSource::TwoRegime,
        Regime::GeometricOnly => HazardSource::GeometricFallback,
    };
    if x == 0.0 {
        let v = if nu == 0 { 1.0 } else { 0.0 };
        return Ok(ScaledBesselBounds {
            interval: Interval::point(v),
            source,
        });
    }
    // ln of 1 / (1 + 2 H) at the two ends of the H bracket
    let ln_i0_lower = -(1.0 + 2.0 * h0.interval.upper).ln();
    let ln_i0_upper = -(1.0 + 2.0 * h0.interval.lower).ln();

    let nuf = nu as f64;
    let (ln_lower, ln_upper) = if nuf <= x {
        // exp(-nu^2/(2x) (nu+1)/nu) written as exp(-nu (nu+1) / (2x))
        (
            -nuf * (nuf + 1.0) / (2.0 * x) + ln_i0_lower,
            -ALPHA0 * nuf * nuf / (2.0 * x) + ln_i0_upper,
        )
    } else {
        let xfl = x.floor();
        let m = nuf - xfl;
        let ln_m_minus_1_fact = ln_gamma_unchecked(m);
        let lower =
            -xfl * (xfl + 1.0) / (2.0 * x) + ln_beta(xfl + 0.5 * x + 1.0, m)? + m * (0.5 * x).ln()
                - ln_m_minus_1_fact
                + ln_i0_lower;
        let upper = -ALPHA0 * xfl * xfl / (2.0 * x) + ln_beta(xfl + x + 0.5, m)? + m * x.ln()
            - ln_m_minus_1_fact
            + ln_i0_upper;
        (lower, upper)
    };
    Ok(ScaledBesselBounds {
        interval: Interval::new(ln_lower.exp(), ln_upper.exp()),
        source,
    })
}

/// Bounds on `P[W = n]` for `W ~ Skellam(lambda1, lambda2)`.
pub fn skellam_pmf_bounds(params: SkellamParams, n: i64) -> Result<Interval> {
    let sb = scaled_bessel_bounds_int(n.unsigned_abs(), params.x())?;
    let factor = params.log_mass_factor(n);
    let lower = if sb.interval.lower > 0.0 {
        (sb.interval.lower.ln() + factor).exp()
    } else {
        0.0
    };
    let upper = (sb.interval.upper.ln() + factor).exp();
    Ok(Interval::new(lower, upper))
}

/// Bounds on the hazard function `1 / (H(nu, 2 lambda) + 1)` of `Skellam(lambda, lambda)`.
pub fn skellam_hazard_bounds(nu: f64, lambda: f64) -> Result<Interval> {
    check_positive("lambda", lambda)?;
    let h = h_bounds(EvalPoint::new(nu, 2.0 * lambda)?).interval;
    Ok(Interval::new(1.0 / (h.upper + 1.0), 1.0 / (h.lower + 1.0)))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConcentrationReport {
    pub nu: u64,
    pub lambda: f64,
    /// Bounds on `P[|W| > nu]`.
    pub interval: Interval,
    pub h_interval: Interval,
    pub scaled_bessel_interval: Interval,
    pub regime: Regime,
    /// The upper end exceeded 1 and was clamped.
    pub upper_clamped: bool,
}

/// Bounds on `P[|W| > nu]` for `W ~ Skellam(lambda, lambda)` from
/// `P[|W| > nu] = 2 H(nu, 2 lambda) exp(-2 lambda) I_nu(2 lambda)`.
pub fn concentration_bounds(nu: u64, lambda: f64) -> Result<ConcentrationReport> {
    check_positive("lambda", lambda)?;
    let x = 2.0 * lambda;
    if x.floor() < 2.0 {
        return Err(BoundsError::Precondition(format!(
            "concentration bounds need [2 lambda] >= 2, got lambda = {lambda}"
        )));
    }
    let HazardBoundReport {
        interval: h,
        regime,
        ..
    } = h_bounds(EvalPoint::new(nu as f64, x)?);
    let sb = scaled_bessel_bounds_int(nu, x)?.interval;
    let lower = 2.0 * h.lower * sb.lower;
    let mut upper = 2.0 * h.upper * sb.upper;
    let upper_clamped = upper > 1.0;
    if upper_clamped {
        log::debug!("clamping P[|W| > {nu}] upper bound {upper:e} to 1 at lambda = {lambda}");
        upper = 1.0;
    }
    Ok(ConcentrationReport {
        nu,
        lambda,
        interval: Interval::new(lower.min(upper), upper),
        h_interval: h,
        scaled_bessel_interval: sb,
        regime,
        upper_clamped,
    })
}
