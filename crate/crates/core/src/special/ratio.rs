use super::bessel::MAX_ITER;
use crate::error::{check_positive, BoundsError, Result};
use crate::point::EvalPoint;

/// `I_{nu+1}(x) / I_nu(x)`, always in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct RatioValue(f64);

impl RatioValue {
    pub fn value(self) -> f64 {
        self.0
    }
}

/// Stopping criterion on the Lentz update factor.
const CF_EPS: f64 = 1e-14;
const TINY: f64 = 1e-300;

/// `I_{nu+1}(x) / I_nu(x)` from the continued fraction
/// `1 / (2(nu+1)/x + 1 / (2(nu+2)/x + ...))`, evaluated with modified Lentz.
///
/// Converges in roughly `max(x, 1)` steps.
pub fn bessel_ratio(p: EvalPoint, tol: f64) -> Result<RatioValue> {
    check_positive("tol", tol)?;
    let (nu, x) = (p.nu(), p.x());
    if x == 0.0 {
        return Ok(RatioValue(0.0));
    }
    let eps = tol.clamp(2.0 * f64::EPSILON, CF_EPS);
    let inv_x = 2.0 / x;
    let mut f = TINY;
    let mut c = f;
    let mut d = 0.0;
    for k in 1..=MAX_ITER {
        let b = (nu + k as f64) * inv_x;
        d += b;
        if d == 0.0 {
            d = TINY;
        }
        c = b + 1.0 / c;
        if c == 0.0 {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < eps {
            return Ok(RatioValue(f));
        }
    }
    Err(BoundsError::NonConvergence {
        routine: "bessel_ratio",
        iterations: MAX_ITER,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::scaled_bessel_i;

    fn ratio(nu: f64, x: f64) -> f64 {
        bessel_ratio(EvalPoint::new(nu, x).unwrap(), 1e-15)
            .unwrap()
            .value()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn zero_argument_is_exactly_zero() {
        assert_eq!(ratio(5.0, 0.0), 0.0);
        assert_eq!(ratio(0.0, 0.0), 0.0);
    }

    #[test]
    fn frozen_reference_values() {
        let cases = [
            (0.0, 2.0, 0.697_774_657_964_007_982_01),
            (0.0, 100.0, 0.994_987_373_005_168_765_59),
            (10.0, 10.0, 0.389_913_883_928_382_983_16),
            (0.5, 0.001, 0.000_333_333_311_111_113_234_45),
            (150.0, 100.0, 0.301_242_429_061_425_375_75),
        ];
        for (nu, x, expected) in cases {
            let got = ratio(nu, x);
            assert!(
                rel(got, expected) < 1e-13,
                "({nu}, {x}): {got} vs {expected}"
            );
        }
    }

    #[test]
    fn agrees_with_quotient_of_scaled_values() {
        for &nu in &[0.0, 0.3, 2.0, 17.5, 120.0] {
            for &x in &[0.1, 1.0, 9.0, 64.0, 500.0, 5000.0] {
                let p = EvalPoint::new(nu, x).unwrap();
                let num = scaled_bessel_i(p.shifted(1.0).unwrap(), 1e-15)
                    .unwrap()
                    .0
                    .log_value;
                let den = scaled_bessel_i(p, 1e-15).unwrap().0.log_value;
                // in log space: e^-x I_121(0.1) is below the smallest subnormal
                let q = (num - den).exp();
                let r = ratio(nu, x);
                assert!(rel(r, q) < 1e-10, "({nu}, {x}): cf {r} vs quotient {q}");
            }
        }
    }

    #[test]
    fn large_argument_converges() {
        let r = ratio(0.0, 5e4);
        assert!(r < 1.0 && r > 0.9999);
    }
}
