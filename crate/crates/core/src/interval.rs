use std::fmt;

/// A closed interval `[lower, upper]` produced by a bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lower: f64,
    pub upper: f64,
}

impl Interval {
    pub fn new(lower: f64, upper: f64) -> Self {
        debug_assert!(
            lower <= upper || lower.is_nan() || upper.is_nan(),
            "inverted interval [{lower}, {upper}]"
        );
        Interval { lower, upper }
    }

    pub fn point(value: f64) -> Self {
        Interval::new(value, value)
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn contains(&self, value: f64) -> bool {
        self.lower <= value && value <= self.upper
    }

    /// Containment allowing each endpoint to miss by `rel` times the magnitude
    /// of `value`. Used to absorb rounding in the oracle.
    pub fn contains_with_slack(&self, value: f64, rel: f64) -> bool {
        let slack = rel * value.abs();
        self.lower - slack <= value && value <= self.upper + slack
    }

    /// Relative amount by which `value` falls outside the interval, or 0.
    pub fn relative_excess(&self, value: f64) -> f64 {
        let scale = value.abs().max(f64::MIN_POSITIVE);
        if value < self.lower {
            (self.lower - value) / scale
        } else if value > self.upper {
            (value - self.upper) / scale
        } else {
            0.0
        }
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lower <= other.lower && other.upper <= self.upper
    }

    /// Intersection, or `None` when the intervals are disjoint.
    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lower = self.lower.max(other.lower);
        let upper = self.upper.min(other.upper);
        (lower <= upper).then(|| Interval::new(lower, upper))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:e}, {:e}]", self.lower, self.upper)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn containment_and_slack() {
        let iv = Interval::new(1.0, 2.0);
        assert!(iv.contains(1.0) && iv.contains(2.0));
        assert!(!iv.contains(2.0 + 1e-12));
        assert!(iv.contains_with_slack(2.0 + 1e-12, 1e-9));
        assert_eq!(iv.relative_excess(1.5), 0.0);
        assert!((iv.relative_excess(4.0) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn intersection() {
        let a = Interval::new(0.0, 2.0);
        let b = Interval::new(1.0, 3.0);
        assert_eq!(a.intersect(&b), Some(Interval::new(1.0, 2.0)));
        assert_eq!(a.intersect(&Interval::new(2.5, 3.0)), None);
        assert!(a.contains_interval(&Interval::new(0.5, 1.5)));
    }
}
