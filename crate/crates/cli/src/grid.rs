use std::fmt;
use std::str::FromStr;

/// Largest number of steps a grid may span.
pub const MAX_GRID_STEPS: f64 = 1e7;

/// Which coordinate a grid sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, serde::Serialize)]
pub enum Var {
    Nu,
    X,
}

/// `start:stop:step` as given on the command line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridRange {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl GridRange {
    pub fn new(start: f64, stop: f64, step: f64) -> Result<Self, String> {
        if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
            return Err("grid bounds must be finite".into());
        }
        if step <= 0.0 {
            return Err(format!("grid step must be positive, got {step}"));
        }
        if start > stop {
            return Err(format!("empty grid: start {start} exceeds stop {stop}"));
        }
        if (stop - start) / step > MAX_GRID_STEPS {
            return Err(format!(
                "grid {start}:{stop}:{step} has more than {MAX_GRID_STEPS:e} steps"
            ));
        }
        Ok(GridRange { start, stop, step })
    }

    /// `start + i step` for `i = 0, 1, ...` up to `stop`. The step count is
    /// rounded so that a stop lying on the grid up to representation error
    /// is included.
    pub fn values(&self) -> Vec<f64> {
        let n = ((self.stop - self.start) / self.step * (1.0 + 1e-12)).floor() as usize;
        (0..=n).map(|i| self.start + i as f64 * self.step).collect()
    }

    /// The grid as integers; every value must be integral.
    pub fn integer_values(&self) -> Result<Vec<i64>, String> {
        self.values()
            .into_iter()
            .map(|v| {
                let r = v.round();
                if (v - r).abs() > 1e-9 {
                    Err(format!("grid value {v} is not an integer"))
                } else {
                    Ok(r as i64)
                }
            })
            .collect()
    }
}

impl FromStr for GridRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("expected start:stop:step, got {s:?}"));
        }
        let num = |p: &str| {
            p.trim()
                .parse::<f64>()
                .map_err(|e| format!("bad grid number {p:?}: {e}"))
        };
        GridRange::new(num(parts[0])?, num(parts[1])?, num(parts[2])?)
    }
}

impl fmt::Display for GridRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.start, self.stop, self.step)
    }
}

/// A sweep over one coordinate with the other held fixed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub var: Var,
    pub range: GridRange,
    pub fixed_other: f64,
}

impl GridSpec {
    /// `(nu, x)` pairs in grid order.
    pub fn pairs(&self) -> Vec<(f64, f64)> {
        self.range
            .values()
            .into_iter()
            .map(|v| match self.var {
                Var::Nu => (v, self.fixed_other),
                Var::X => (self.fixed_other, v),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_grids_have_expected_lengths() {
        let g: GridRange = "0:150:0.015".parse().unwrap();
        let v = g.values();
        assert_eq!(v.len(), 10_001);
        assert!((v[10_000] - 150.0).abs() < 1e-9);
        assert_eq!(
            "0:200:0.01".parse::<GridRange>().unwrap().values().len(),
            20_001
        );
        assert_eq!(
            "0:100:0.01".parse::<GridRange>().unwrap().values().len(),
            10_001
        );
        assert_eq!("3:3:1".parse::<GridRange>().unwrap().values(), vec![3.0]);
    }

    #[test]
    fn rejects_bad_grids() {
        for s in [
            "0:1:0",
            "0:1:-1",
            "2:1:0.5",
            "0:1",
            "a:1:1",
            "0:1e9:1e-3",
            "0:inf:1",
        ] {
            assert!(s.parse::<GridRange>().is_err(), "{s}");
        }
    }

    #[test]
    fn integer_grids() {
        let g: GridRange = "-2:4:2".parse().unwrap();
        assert_eq!(g.integer_values().unwrap(), vec![-2, 0, 2, 4]);
        assert!("0:1:0.5"
            .parse::<GridRange>()
            .unwrap()
            .integer_values()
            .is_err());
    }

    #[test]
    fn pairs_follow_the_swept_variable() {
        let range = GridRange::new(0.0, 1.0, 0.5).unwrap();
        let g = GridSpec {
            var: Var::X,
            range,
            fixed_other: 3.0,
        };
        assert_eq!(g.pairs(), vec![(3.0, 0.0), (3.0, 0.5), (3.0, 1.0)]);
    }
}
