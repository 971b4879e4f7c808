//! Scaled modified Bessel function `exp(-x) I_nu(x)`.
//!
//! Three evaluation routes, all returning the value and its natural log:
//!
//! * the power series `sum_k (x/2)^(2k+nu) / (k! Γ(k+nu+1))`, summed as a
//!   running product of term ratios relative to a log-space leading term,
//!   for `x <= SERIES_MAX_X`;
//! * the large-argument (Hankel) expansion for bigger `x` with `nu < DEBYE_MIN_NU`;
//! * the uniform large-order (Debye) expansion otherwise.
//!
//! Nothing is ever formed as `I_nu(x)` itself, so there is no overflow.

use std::f64::consts::{LN_2, PI};

use once_cell::sync::Lazy;

use super::gamma::ln_gamma_unchecked;
use super::TruncationCertificate;
use crate::error::{check_positive, BoundsError, Result};
use crate::kernel::kernel;
use crate::point::EvalPoint;

/// The series is used up to this argument; beyond it the asymptotic forms
/// are accurate to machine precision and far cheaper.
pub(crate) const SERIES_MAX_X: f64 = 2.5e4;
pub(crate) const DEBYE_MIN_NU: f64 = 50.0;
pub(crate) const MAX_ITER: usize = 100_000;

const RESCALE_EXP: i32 = 800;
const RESCALE_THRESHOLD: f64 = 1e200;
const DEBYE_TERMS: usize = 20;

/// `exp(-x) I_nu(x)` together with its natural log.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledBessel {
    pub value: f64,
    /// `-inf` when `value == 0`.
    pub log_value: f64,
}

impl ScaledBessel {
    fn from_log(log_value: f64) -> Self {
        ScaledBessel {
            value: log_value.exp(),
            log_value,
        }
    }
}

/// `exp(-x) I_nu(x)` to relative accuracy `tol` (limited below by the
/// conditioning of the function, roughly `1e-16 * max(x, nu)`).
///
/// The certificate's `tail_bound` is relative to the returned value. For the
/// convergent series it is a rigorous geometric bound; for the asymptotic
/// routes it is the magnitude of the first omitted term.
pub fn scaled_bessel_i(p: EvalPoint, tol: f64) -> Result<(ScaledBessel, TruncationCertificate)> {
    check_positive("tol", tol)?;
    let (nu, x) = (p.nu(), p.x());
    if x == 0.0 {
        let sb = if nu == 0.0 {
            ScaledBessel {
                value: 1.0,
                log_value: 0.0,
            }
        } else {
            ScaledBessel {
                value: 0.0,
                log_value: f64::NEG_INFINITY,
            }
        };
        return Ok((sb, TruncationCertificate::exact(tol)));
    }
    if x <= SERIES_MAX_X {
        series(nu, x, tol)
    } else if nu < DEBYE_MIN_NU {
        hankel(nu, x, tol)
    } else {
        debye(nu, x, tol)
    }
}

pub(crate) fn series(nu: f64, x: f64, tol: f64) -> Result<(ScaledBessel, TruncationCertificate)> {
    let half = 0.5 * x;
    let q = half * half;
    // log of the k = 0 term, exp(-x) (x/2)^nu / Γ(nu + 1)
    let log_base = if nu == 0.0 {
        -x
    } else {
        nu * half.ln() - ln_gamma_unchecked(nu + 1.0) - x
    };
    let mut rescales = 0i32;
    let mut sum: f64 = 1.0;
    let mut term = 1.0;
    for k in 0..MAX_ITER {
        let kf = k as f64;
        let ratio = q / ((kf + 1.0) * (kf + 1.0 + nu));
        if ratio < 1.0 {
            // later ratios are smaller still, so the tail is dominated by a
            // geometric series in `ratio`
            let tail = term * ratio / (1.0 - ratio) / sum;
            if tail <= tol {
                let log_value = log_base + f64::from(rescales * RESCALE_EXP) * LN_2 + sum.ln();
                return Ok((
                    ScaledBessel::from_log(log_value),
                    TruncationCertificate {
                        terms_used: k + 1,
                        tail_bound: tail,
                        requested_tol: tol,
                    },
                ));
            }
        }
        term *= ratio;
        sum += term;
        if sum > RESCALE_THRESHOLD {
            let scale = 2f64.powi(-RESCALE_EXP);
            sum *= scale;
            term *= scale;
            rescales += 1;
        }
    }
    Err(BoundsError::NonConvergence {
        routine: "scaled_bessel_i (series)",
        iterations: MAX_ITER,
    })
}

/// First `terms` terms of the series, for certificate checks.
pub fn scaled_bessel_series_partial(p: EvalPoint, terms: usize) -> f64 {
    let (nu, x) = (p.nu(), p.x());
    if x == 0.0 {
        return if nu == 0.0 && terms > 0 { 1.0 } else { 0.0 };
    }
    let half = 0.5 * x;
    let q = half * half;
    let log_base = if nu == 0.0 {
        -x
    } else {
        nu * half.ln() - ln_gamma_unchecked(nu + 1.0) - x
    };
    let mut rescales = 0i32;
    let mut sum = 0.0;
    let mut term = 1.0;
    for k in 0..terms {
        sum += term;
        let kf = k as f64;
        term *= q / ((kf + 1.0) * (kf + 1.0 + nu));
        if sum > RESCALE_THRESHOLD {
            let scale = 2f64.powi(-RESCALE_EXP);
            sum *= scale;
            term *= scale;
            rescales += 1;
        }
    }
    (log_base + f64::from(rescales * RESCALE_EXP) * LN_2 + sum.ln()).exp()
}

pub(crate) fn hankel(nu: f64, x: f64, tol: f64) -> Result<(ScaledBessel, TruncationCertificate)> {
    let mu = 4.0 * nu * nu;
    let mut sum: f64 = 1.0;
    let mut term = 1.0f64;
    for k in 1..200usize {
        let odd = (2 * k - 1) as f64;
        let next = -term * (mu - odd * odd) / (8.0 * k as f64 * x);
        if next.abs() <= tol * sum.abs() {
            let log_value = sum.ln() - 0.5 * (2.0 * PI * x).ln();
            return Ok((
                ScaledBessel::from_log(log_value),
                TruncationCertificate {
                    terms_used: k,
                    tail_bound: next.abs() / sum.abs(),
                    requested_tol: tol,
                },
            ));
        }
        if k > 1 && next.abs() >= term.abs() {
            return Err(BoundsError::NonConvergence {
                routine: "scaled_bessel_i (large-argument expansion)",
                iterations: k,
            });
        }
        term = next;
        sum += term;
    }
    Err(BoundsError::NonConvergence {
        routine: "scaled_bessel_i (large-argument expansion)",
        iterations: 200,
    })
}

/// Coefficients (ascending powers of p) of the Debye polynomials `u_k(p)`,
/// from `u_{k+1} = p^2 (1 - p^2) u_k' / 2 + (1/8) int_0^p (1 - 5t^2) u_k(t) dt`.
static DEBYE_POLYS: Lazy<Vec<Vec<f64>>> = Lazy::new(|| {
    let mut polys = vec![vec![1.0]];
    for k in 0..DEBYE_TERMS - 1 {
        let c = &polys[k];
        let mut next = vec![0.0; c.len() + 3];
        for (i, &ci) in c.iter().enumerate().skip(1) {
            // derivative term i c_i p^(i-1), times (p^2 - p^4) / 2
            let d = 0.5 * i as f64 * ci;
            next[i + 1] += d;
            next[i + 3] -= d;
        }
        for (i, &ci) in c.iter().enumerate() {
            next[i + 1] += ci / (8.0 * (i + 1) as f64);
            next[i + 3] -= 5.0 * ci / (8.0 * (i + 3) as f64);
        }
        polys.push(next);
    }
    polys
});

fn horner(coeffs: &[f64], p: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * p + c)
}

pub(crate) fn debye(nu: f64, x: f64, tol: f64) -> Result<(ScaledBessel, TruncationCertificate)> {
    let root = nu.hypot(x);
    let p = nu / root;
    // -x + nu * eta, with nu * sqrt(1 + z^2) - x rewritten to avoid cancellation
    let exponent = nu * nu / (x + root) + nu * kernel(nu, x).ln();
    let polys = &*DEBYE_POLYS;
    let mut sum: f64 = 1.0;
    let mut nu_pow = 1.0;
    for (k, poly) in polys.iter().enumerate().skip(1) {
        nu_pow /= nu;
        let term = horner(poly, p) * nu_pow;
        if term.abs() <= tol * sum.abs() {
            let log_value = exponent - 0.5 * (2.0 * PI).ln() - 0.5 * root.ln() + sum.ln();
            return Ok((
                ScaledBessel::from_log(log_value),
                TruncationCertificate {
                    terms_used: k,
                    tail_bound: term.abs() / sum.abs(),
                    requested_tol: tol,
                },
            ));
        }
        sum += term;
    }
    Err(BoundsError::NonConvergence {
        routine: "scaled_bessel_i (uniform expansion)",
        iterations: DEBYE_TERMS,
    })
}
