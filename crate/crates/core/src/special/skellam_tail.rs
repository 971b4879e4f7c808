use super::bessel::scaled_bessel_i;
use super::TruncationCertificate;
use crate::error::{check_positive, BoundsError, Result};
use crate::kernel::{kernel, one_minus_kernel};
use crate::point::EvalPoint;
use crate::skellam::SkellamParams;

const MAX_TERMS: usize = 1_000_000;
const PMF_TOL: f64 = 1e-15;

/// Exact `P[|W| > n]` for `W ~ Skellam(lambda, lambda)`.
///
/// This is `1 - sum_{|k| <= n} P[W = k]`, evaluated as the equal quantity
/// `2 sum_{k > n} exp(-x) I_k(x)` with `x = 2 lambda` so that tiny tails keep
/// their relative precision. The sum stops when the geometric bound on the
/// rest (ratios `I_{k+1}/I_k <= F(k + 1/2, x)`) drops to `tol`.
pub fn skellam_tail_oracle(
    params: SkellamParams,
    n: u64,
    tol: f64,
) -> Result<(f64, TruncationCertificate)> {
    check_positive("tol", tol)?;
    if params.lambda1() != params.lambda2() {
        return Err(BoundsError::AsymmetricParameters {
            lambda1: params.lambda1(),
            lambda2: params.lambda2(),
        });
    }
    let x = params.x();
    let mut sum = 0.0;
    for i in 1..=MAX_TERMS {
        let k = n as f64 + i as f64;
        let (sb, _) = scaled_bessel_i(EvalPoint::new(k, x)?, PMF_TOL)?;
        sum += 2.0 * sb.value;
        let a = k + 0.5;
        let tail = 2.0 * sb.value * kernel(a, x) / one_minus_kernel(a, x);
        if tail <= tol {
            return Ok((
                sum,
                TruncationCertificate {
                    terms_used: i,
                    tail_bound: tail,
                    requested_tol: tol,
                },
            ));
        }
    }
    Err(BoundsError::NonConvergence {
        routine: "skellam_tail_oracle",
        iterations: MAX_TERMS,
    })
}
