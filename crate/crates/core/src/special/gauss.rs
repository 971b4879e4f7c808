use std::f64::consts::PI;

use crate::error::{check_nonneg, Result};
use crate::interval::Interval;

/// Bracket on `int_t^inf exp(-u^2) du` for `t >= 0`:
/// `exp(-t^2) / (t + sqrt(t^2 + 2))` below and
/// `exp(-t^2) / (t + sqrt(t^2 + 4/pi))` above.
pub fn gaussian_tail_bounds(t: f64) -> Result<Interval> {
    check_nonneg("t", t)?;
    let g = (-t * t).exp();
    let lower = g / (t + (t * t + 2.0).sqrt());
    let upper = g / (t + (t * t + 4.0 / PI).sqrt());
    Ok(Interval::new(lower, upper))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `exp(t^2) int_t^inf exp(-u^2) du = int_0^inf exp(-2ts - s^2) ds`,
    /// by composite Simpson on [0, 12].
    fn scaled_tail_quadrature(t: f64) -> f64 {
        let n = 20_000;
        let h = 12.0 / n as f64;
        let f = |s: f64| (-2.0 * t * s - s * s).exp();
        let mut acc = f(0.0) + f(12.0);
        for i in 1..n {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            acc += w * f(i as f64 * h);
        }
        acc * h / 3.0
    }

    #[test]
    fn at_zero_upper_end_is_exact() {
        let iv = gaussian_tail_bounds(0.0).unwrap();
        assert!((iv.lower - 1.0 / 2f64.sqrt()).abs() < 1e-15);
        assert!((iv.upper - PI.sqrt() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn brackets_quadrature() {
        for i in 0..=100 {
            let t = 0.1 * i as f64;
            let iv = gaussian_tail_bounds(t).unwrap();
            let q = scaled_tail_quadrature(t) * (-t * t).exp();
            assert!(iv.contains_with_slack(q, 1e-12), "t = {t}: {q} not in {iv}");
        }
    }

    #[test]
    fn quadrature_matches_reference() {
        let q = scaled_tail_quadrature(1.0) * (-1.0f64).exp();
        assert!((q - 0.139_402_792_640_330_988_25).abs() < 1e-13);
        let iv = gaussian_tail_bounds(1.0).unwrap();
        assert!(iv.contains(0.139_402_792_640_330_988_25));
        let iv = gaussian_tail_bounds(5.0).unwrap();
        assert!(iv.contains(1.362_538_266_623_186_701_7e-12));
    }

    #[test]
    fn far_tail_is_positive_and_ordered() {
        let iv = gaussian_tail_bounds(10.0).unwrap();
        assert!(iv.lower > 0.0 && iv.lower <= iv.upper);
        assert!(gaussian_tail_bounds(-1.0).is_err());
    }
}
