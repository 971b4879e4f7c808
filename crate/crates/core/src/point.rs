use crate::error::{check_nonneg, Result};

/// An `(nu, x)` argument pair with its floor / fractional decomposition.
///
/// Floors use the standard convention: at integer inputs the fractional part
/// is exactly zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPoint {
    nu: f64,
    x: f64,
}

impl EvalPoint {
    pub fn new(nu: f64, x: f64) -> Result<Self> {
        check_nonneg("nu", nu)?;
        check_nonneg("x", x)?;
        Ok(EvalPoint { nu, x })
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    /// `[nu]`, as a float.
    pub fn nu_floor(&self) -> f64 {
        self.nu.floor()
    }

    /// `nu - [nu]`, in `[0, 1)`.
    pub fn nu_frac(&self) -> f64 {
        self.nu - self.nu.floor()
    }

    pub fn x_floor(&self) -> f64 {
        self.x.floor()
    }

    pub fn x_frac(&self) -> f64 {
        self.x - self.x.floor()
    }

    /// The same argument with the order shifted by `delta` (which keeps
    /// `nu >= 0` as long as `delta >= 0`).
    pub fn shifted(&self, delta: f64) -> Result<Self> {
        EvalPoint::new(self.nu + delta, self.x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn integer_inputs_have_zero_fraction() {
        let p = EvalPoint::new(3.0, 50.0).unwrap();
        assert_eq!(p.nu_floor(), 3.0);
        assert_eq!(p.nu_frac(), 0.0);
        assert_eq!(p.x_floor(), 50.0);
        assert_eq!(p.x_frac(), 0.0);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(EvalPoint::new(-0.5, 1.0).is_err());
        assert!(EvalPoint::new(0.5, -1.0).is_err());
        assert!(EvalPoint::new(f64::NAN, 1.0).is_err());
        assert!(EvalPoint::new(1.0, f64::INFINITY).is_err());
    }

    proptest! {
        #[test]
        fn decomposition_is_exact(nu in 0.0f64..1e6, x in 0.0f64..1e6) {
            let p = EvalPoint::new(nu, x).unwrap();
            prop_assert_eq!(p.nu_floor() + p.nu_frac(), nu);
            prop_assert!((0.0..1.0).contains(&p.nu_frac()));
            prop_assert_eq!(p.x_floor() + p.x_frac(), x);
            prop_assert!((0.0..1.0).contains(&p.x_frac()));
        }
    }
}
