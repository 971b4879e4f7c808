//! The verification sweep: every bound against its oracle over fixed grids.

use bessel_bounds::{
    bessel_ratio, combined_ratio_bounds, concentration_bounds, h_bounds, hazard_sum_oracle,
    scaled_bessel_bounds_int, scaled_bessel_i, skellam_log_pmf, skellam_pmf_bounds,
    skellam_tail_oracle, EvalPoint, Interval, SkellamParams,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::grid::GridRange;
use crate::{CliError, VerifyArgs};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Preset {
    /// Coarse grids, a few seconds.
    Quick,
    /// The figure grids at full resolution.
    Full,
}

/// Oracle tolerances used by the sweep; far below the default slack.
const RATIO_TOL: f64 = 1e-15;
const H_TOL: f64 = 1e-13;
const BESSEL_TOL: f64 = 1e-15;
const TAIL_TOL: f64 = 1e-300;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub check: &'static str,
    pub nu: f64,
    pub x: f64,
    pub bound_name: &'static str,
    pub bound_value: f64,
    pub oracle_value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckSummary {
    pub name: &'static str,
    pub points_checked: usize,
    pub violations: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub preset: Preset,
    pub tol: f64,
    pub points_checked: usize,
    pub violations: Vec<Violation>,
    /// Largest relative distance by which an oracle fell outside its interval.
    pub max_relative_slack: f64,
    pub checks: Vec<CheckSummary>,
}

/// One bound evaluation: `(nu, x)`, the interval and the oracle.
struct Sample {
    nu: f64,
    x: f64,
    interval: Interval,
    oracle: f64,
}

type Samples = Result<Vec<Sample>, CliError>;

fn pt(nu: f64, x: f64) -> EvalPoint {
    EvalPoint::new(nu, x).expect("verification grids are valid")
}

fn grid(start: f64, stop: f64, step: f64) -> Vec<f64> {
    GridRange::new(start, stop, step)
        .expect("valid grid")
        .values()
}

fn ratio_samples(nus: &[f64], xs: &[f64]) -> Samples {
    let pairs: Vec<(f64, f64)> = xs
        .iter()
        .flat_map(|&x| nus.iter().map(move |&nu| (nu, x)))
        .collect();
    pairs
        .par_iter()
        .map(|&(nu, x)| {
            let p = pt(nu, x);
            Ok(Sample {
                nu,
                x,
                interval: combined_ratio_bounds(p).interval,
                oracle: bessel_ratio(p, RATIO_TOL)?.value(),
            })
        })
        .collect()
}

fn hazard_samples(nus: &[f64], xs: &[f64]) -> Samples {
    let pairs: Vec<(f64, f64)> = xs
        .iter()
        .flat_map(|&x| nus.iter().map(move |&nu| (nu, x)))
        .collect();
    pairs
        .par_iter()
        .map(|&(nu, x)| {
            let p = pt(nu, x);
            Ok(Sample {
                nu,
                x,
                interval: h_bounds(p).interval,
                oracle: hazard_sum_oracle(p, H_TOL)?.0,
            })
        })
        .collect()
}

fn scaled_bessel_samples(pairs: &[(u64, f64)]) -> Samples {
    pairs
        .par_iter()
        .map(|&(nu, x)| {
            Ok(Sample {
                nu: nu as f64,
                x,
                interval: scaled_bessel_bounds_int(nu, x)?.interval,
                oracle: scaled_bessel_i(pt(nu as f64, x), BESSEL_TOL)?.0.value,
            })
        })
        .collect()
}

fn concentration_samples(lambdas: &[f64]) -> Samples {
    let pairs: Vec<(u64, f64)> = lambdas
        .iter()
        .flat_map(|&l| (0..=(4.0 * l) as u64).map(move |nu| (nu, l)))
        .collect();
    pairs
        .par_iter()
        .map(|&(nu, lambda)| {
            let p = SkellamParams::symmetric(lambda)?;
            Ok(Sample {
                nu: nu as f64,
                x: 2.0 * lambda,
                interval: concentration_bounds(nu, lambda)?.interval,
                oracle: skellam_tail_oracle(p, nu, TAIL_TOL)?.0,
            })
        })
        .collect()
}

fn pmf_samples(rates: &[(f64, f64)], n_max: i64) -> Samples {
    let pairs: Vec<((f64, f64), i64)> = rates
        .iter()
        .flat_map(|&r| (-n_max..=n_max).map(move |n| (r, n)))
        .collect();
    pairs
        .par_iter()
        .map(|&((l1, l2), n)| {
            let p = SkellamParams::new(l1, l2)?;
            Ok(Sample {
                nu: n as f64,
                x: p.x(),
                interval: skellam_pmf_bounds(p, n)?,
                oracle: skellam_log_pmf(p, n)?.exp(),
            })
        })
        .collect()
}

pub fn run_verify(a: &VerifyArgs) -> Result<SweepReport, CliError> {
    if !(a.tol >= 0.0 && a.tol.is_finite()) {
        return Err(CliError::Usage(format!(
            "--tol must be non-negative, got {}",
            a.tol
        )));
    }
    let full = a.preset == Preset::Full;
    let pick = |quick: f64, full_step: f64| if full { full_step } else { quick };
    let fig1_nus = a
        .grid
        .map_or_else(|| grid(0.0, 150.0, pick(0.15, 0.015)), |g| g.values());
    let fig2_nus = a
        .grid
        .map_or_else(|| grid(0.0, 200.0, pick(0.5, 0.01)), |g| g.values());
    let sub_nus = grid(0.0, 199.5, pick(2.5, 0.5));
    let sub_xs = [2.0, 5.0, 10.0, 50.0, 100.0];
    let fig3: Vec<(u64, f64)> = grid(0.0, 100.0, pick(0.1, 0.01))
        .into_iter()
        .map(|x| (0, x))
        .collect();
    let int_xs: &[f64] = if full {
        &[10.0, 50.0, 100.0]
    } else {
        &[10.0, 50.0]
    };
    let int_pairs: Vec<(u64, f64)> = int_xs
        .iter()
        .flat_map(|&x| (0..=(2.0 * x) as u64).map(move |nu| (nu, x)))
        .collect();
    let lambdas: &[f64] = if full { &[5.0, 25.0] } else { &[5.0] };
    let rates = [(1.0, 1.0), (4.0, 9.0), (25.0, 25.0), (100.0, 100.0)];

    let checks: Vec<(&'static str, Samples)> = vec![
        ("ratio_figure1", ratio_samples(&fig1_nus, &[100.0])),
        (
            "ratio_mixed_x",
            ratio_samples(&sub_nus, &[0.5, 2.0, 10.0, 100.0, 1000.0]),
        ),
        ("hsum_figure2", hazard_samples(&fig2_nus, &[50.0])),
        ("hsum_subgrid", hazard_samples(&sub_nus, &sub_xs)),
        ("scaled_bessel_figure3", scaled_bessel_samples(&fig3)),
        ("scaled_bessel_integer", scaled_bessel_samples(&int_pairs)),
        ("skellam_concentration", concentration_samples(lambdas)),
        ("skellam_pmf", pmf_samples(&rates, 60)),
    ];

    let mut report = SweepReport {
        preset: a.preset,
        tol: a.tol,
        points_checked: 0,
        violations: Vec::new(),
        max_relative_slack: 0.0,
        checks: Vec::new(),
    };
    for (name, samples) in checks {
        let samples = samples?;
        let before = report.violations.len();
        for s in &samples {
            let mut iv = s.interval;
            if let Some(f) = a.perturb_upper {
                iv.upper *= f;
            }
            report.max_relative_slack = report.max_relative_slack.max(iv.relative_excess(s.oracle));
            if !iv.contains_with_slack(s.oracle, a.tol) {
                let (bound_name, bound_value) = if s.oracle < iv.lower {
                    ("lower", iv.lower)
                } else {
                    ("upper", iv.upper)
                };
                report.violations.push(Violation {
                    check: name,
                    nu: s.nu,
                    x: s.x,
                    bound_name,
                    bound_value,
                    oracle_value: s.oracle,
                });
            }
        }
        report.points_checked += samples.len();
        report.checks.push(CheckSummary {
            name,
            points_checked: samples.len(),
            violations: report.violations.len() - before,
        });
    }
    Ok(report)
}
