use super::ratio::bessel_ratio;
use super::TruncationCertificate;
use crate::error::{check_positive, BoundsError, Result};
use crate::kernel::{kernel, one_minus_kernel};
use crate::point::EvalPoint;

const MAX_TERMS: usize = 100_000;
const RATIO_TOL: f64 = 1e-15;

/// `H(nu, x) = sum_{n >= 1} I_{nu+n}(x) / I_nu(x)` as a running sum of ratio
/// products.
///
/// After `n` terms with last product `P_n`, every remaining ratio is at most
/// the Amos upper value `F(nu + n + 1/2, x)`, so the discarded tail is at most
/// `P_n q / (1 - q)` with that `q`. Summation stops once this absolute bound
/// is `<= tol`.
pub fn hazard_sum_oracle(p: EvalPoint, tol: f64) -> Result<(f64, TruncationCertificate)> {
    check_positive("tol", tol)?;
    let (nu, x) = (p.nu(), p.x());
    if x == 0.0 {
        return Ok((0.0, TruncationCertificate::exact(tol)));
    }
    let mut product = 1.0;
    let mut sum = 0.0;
    for n in 1..=MAX_TERMS {
        let order = nu + (n - 1) as f64;
        let r = bessel_ratio(EvalPoint::new(order, x)?, RATIO_TOL)?.value();
        product *= r;
        sum += product;
        let a = nu + n as f64 + 0.5;
        let tail = product * kernel(a, x) / one_minus_kernel(a, x);
        if tail <= tol {
            return Ok((
                sum,
                TruncationCertificate {
                    terms_used: n,
                    tail_bound: tail,
                    requested_tol: tol,
                },
            ));
        }
    }
    Err(BoundsError::NonConvergence {
        routine: "hazard_sum_oracle",
        iterations: MAX_TERMS,
    })
}

/// The first `terms` terms of `H(nu, x)`.
pub fn hazard_partial_sum(p: EvalPoint, terms: usize) -> Result<f64> {
    let (nu, x) = (p.nu(), p.x());
    if x == 0.0 {
        return Ok(0.0);
    }
    let mut product = 1.0;
    let mut sum = 0.0;
    for n in 1..=terms {
        let order = nu + (n - 1) as f64;
        product *= bessel_ratio(EvalPoint::new(order, x)?, RATIO_TOL)?.value();
        sum += product;
        if product == 0.0 {
            break;
        }
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(nu: f64, x: f64) -> EvalPoint {
        EvalPoint::new(nu, x).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn zero_argument() {
        for nu in [0.0, 1.5, 40.0] {
            let (h, cert) = hazard_sum_oracle(pt(nu, 0.0), 1e-12).unwrap();
            assert_eq!(h, 0.0);
            assert_eq!(cert.tail_bound, 0.0);
        }
    }

    #[test]
    fn frozen_reference_values() {
        let cases = [
            (0.0, 50.0, 8.339_915_498_125_171_456_9),
            (200.0, 50.0, 0.139_520_674_282_921_855_81),
            (0.0, 2.0, 1.120_701_820_493_076_806_8),
            (3.5, 10.0, 1.492_200_542_183_599_267_3),
        ];
        for (nu, x, expected) in cases {
            let (h, cert) = hazard_sum_oracle(pt(nu, x), 1e-13).unwrap();
            assert!(cert.tail_bound <= 1e-13);
            assert!(rel(h, expected) < 1e-11, "({nu}, {x}): {h} vs {expected}");
        }
    }

    #[test]
    fn recursion_identity() {
        for &(nu, x) in &[(0.0, 50.0), (2.25, 7.0), (60.0, 100.0), (0.5, 0.5)] {
            let p = pt(nu, x);
            let h = hazard_sum_oracle(p, 1e-14).unwrap().0;
            let h1 = hazard_sum_oracle(p.shifted(1.0).unwrap(), 1e-14).unwrap().0;
            let r = bessel_ratio(p, 1e-15).unwrap().value();
            assert!(rel(h, r * (1.0 + h1)) < 1e-9, "({nu}, {x})");
        }
    }

    #[test]
    fn certificate_is_honest() {
        for &(nu, x) in &[(0.0, 50.0), (10.0, 3.0), (0.0, 400.0)] {
            let p = pt(nu, x);
            let (h, cert) = hazard_sum_oracle(p, 1e-6).unwrap();
            let longer = hazard_partial_sum(p, 10 * cert.terms_used).unwrap();
            let discarded = longer - h;
            assert!(discarded >= -1e-12);
            assert!(discarded <= cert.tail_bound + 1e-12 * h, "({nu}, {x})");
        }
    }

    #[test]
    fn loose_tolerance_truncates_earlier() {
        let p = pt(0.0, 50.0);
        let (_, loose) = hazard_sum_oracle(p, 0.01).unwrap();
        let (_, tight) = hazard_sum_oracle(p, 1e-12).unwrap();
        assert!(loose.terms_used < tight.terms_used);
        assert!(loose.tail_bound <= 0.01);
    }
}
