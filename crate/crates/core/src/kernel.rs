//! The algebraic kernel `F(a, x) = x / (a + sqrt(a^2 + x^2))` shared by the
//! Amos ratio bounds, every hazard bound and the truncation certificates.

/// `F(a, x)`. Callers guarantee `a >= 0`, `x >= 0`, not both zero.
#[inline]
pub(crate) fn kernel(a: f64, x: f64) -> f64 {
    x / (a + a.hypot(x))
}

/// `1 - F(a, x)` without cancellation when `x >> a`.
#[inline]
pub(crate) fn one_minus_kernel(a: f64, x: f64) -> f64 {
    let root = a.hypot(x);
    // sqrt(a^2 + x^2) - x = a^2 / (sqrt(a^2 + x^2) + x)
    (a + a * a / (root + x)) / (a + root)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_matches_direct_form() {
        for &(a, x) in &[(0.5, 1.0), (1.5, 50.0), (200.0, 50.0), (3.0, 0.0)] {
            let direct = 1.0 - kernel(a, x);
            assert!((one_minus_kernel(a, x) - direct).abs() < 1e-15);
        }
        // 1 - F(1.5, 1e8) = 1.5e-8 to leading order; the direct form has ~8 digits.
        let c = one_minus_kernel(1.5, 1e8);
        assert!(((c - 1.5e-8) / 1.5e-8).abs() < 1e-7);
    }
}
