//! CSV producers for the evaluation subcommands.

use std::path::Path;

use bessel_bounds::{
    amos_ratio_bounds, bessel_ratio, concentration_bounds, exp_ratio_bounds, geometric_h_bounds,
    h_bounds, hazard_sum_oracle, scaled_bessel_bounds_int, scaled_bessel_i, skellam_log_pmf,
    skellam_pmf_bounds, skellam_tail_oracle, EvalPoint, HazardSource, Regime, SkellamParams,
};
use rayon::prelude::*;

use crate::csv::{render_row, render_table, Cell};
use crate::grid::{GridRange, GridSpec, Var};
use crate::{CliError, HsumArgs, SkellamArgs, SkellamCommand, SweepArgs};

pub const RATIO_HEADER: [&str; 7] = [
    "nu",
    "x",
    "amos_lower",
    "amos_upper",
    "exp_lower",
    "exp_upper",
    "oracle",
];
pub const HSUM_HEADER: [&str; 9] = [
    "nu",
    "x",
    "regime",
    "geo_lower",
    "geo_upper",
    "L",
    "U",
    "oracle",
    "oracle_tail_bound",
];
pub const SCALED_BESSEL_HEADER: [&str; 6] = [
    "x",
    "oracle",
    "asymptotic",
    "lower",
    "upper",
    "fallback_flag",
];

/// `--figure` presets: grid over one coordinate, the other fixed.
pub fn figure_preset(figure: u8) -> Option<GridSpec> {
    let (var, start, stop, step, fixed_other) = match figure {
        1 => (Var::Nu, 0.0, 150.0, 0.015, 100.0),
        2 => (Var::Nu, 0.0, 200.0, 0.01, 50.0),
        3 => (Var::X, 0.0, 100.0, 0.01, 0.0),
        _ => return None,
    };
    Some(GridSpec {
        var,
        range: GridRange::new(start, stop, step).expect("preset grids are valid"),
        fixed_other,
    })
}

/// Truncation tolerance of the H oracle under `--figure 2`.
pub const FIGURE2_EPS: f64 = 0.01;

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

/// The `(nu, x)` points requested by a sweep command.
fn resolve_points(
    a: &SweepArgs,
    figure: u8,
    default_var: Var,
    default_nu: Option<f64>,
) -> Result<Vec<(f64, f64)>, CliError> {
    let nu = a.nu.or(default_nu);
    if let Some(f) = a.figure {
        if f != figure {
            return usage(format!(
                "this subcommand reproduces figure {figure}, not {f}"
            ));
        }
        let mut spec = figure_preset(f).expect("known figure");
        if let Some(r) = a.grid {
            spec.range = r;
        }
        let fixed = match spec.var {
            Var::Nu => a.x,
            Var::X => a.nu,
        };
        if let Some(v) = fixed {
            spec.fixed_other = v;
        }
        return Ok(spec.pairs());
    }
    match a.grid {
        Some(range) => {
            let var = a.vary.unwrap_or(default_var);
            let fixed_other = match var {
                Var::Nu => {
                    a.x.ok_or_else(|| CliError::Usage("--grid over nu needs --x".into()))?
                }
                Var::X => nu.ok_or_else(|| CliError::Usage("--grid over x needs --nu".into()))?,
            };
            Ok(GridSpec {
                var,
                range,
                fixed_other,
            }
            .pairs())
        }
        None => match (nu, a.x) {
            (Some(nu), Some(x)) => Ok(vec![(nu, x)]),
            _ => usage("give --nu and --x, a --grid, or a --figure"),
        },
    }
}

fn point(nu: f64, x: f64) -> Result<EvalPoint, CliError> {
    Ok(EvalPoint::new(nu, x)?)
}

fn check_tol(name: &str, tol: f64) -> Result<(), CliError> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        usage(format!("--{name} must be positive, got {tol}"))
    }
}

fn rows<T, F>(items: &[T], f: F) -> Result<Vec<String>, CliError>
where
    T: Sync,
    F: Fn(&T) -> Result<Vec<Cell>, CliError> + Sync,
{
    items
        .par_iter()
        .map(|it| f(it).map(|c| render_row(&c)))
        .collect()
}

pub fn ratio_csv(a: &SweepArgs) -> Result<String, CliError> {
    check_tol("tol", a.tol)?;
    let pts = resolve_points(a, 1, Var::Nu, None)?;
    let body = rows(&pts, |&(nu, x)| {
        let p = point(nu, x)?;
        let amos = amos_ratio_bounds(p);
        let exp = exp_ratio_bounds(p).ok();
        let oracle = bessel_ratio(p, a.tol)?.value();
        Ok(vec![
            Cell::Real(nu),
            Cell::Real(x),
            Cell::Real(amos.lower),
            Cell::Real(amos.upper),
            Cell::opt(exp.map(|e| e.lower)),
            Cell::opt(exp.map(|e| e.upper)),
            Cell::Real(oracle),
        ])
    })?;
    Ok(render_table(&RATIO_HEADER, &body))
}

pub fn hsum_csv(a: &HsumArgs) -> Result<String, CliError> {
    let eps = match (a.eps, a.sweep.figure) {
        (Some(e), _) => e,
        (None, Some(2)) => FIGURE2_EPS,
        (None, _) => a.sweep.tol,
    };
    check_tol("eps", eps)?;
    let pts = resolve_points(&a.sweep, 2, Var::Nu, None)?;
    let body = rows(&pts, |&(nu, x)| {
        let p = point(nu, x)?;
        let geo = geometric_h_bounds(p);
        let report = h_bounds(p);
        let (regime, l, u) = match report.regime {
            Regime::GeometricOnly => ("geometric_only", None, None),
            Regime::TwoRegime => (
                "two_regime",
                Some(report.interval.lower),
                Some(report.interval.upper),
            ),
        };
        let (oracle, cert) = hazard_sum_oracle(p, eps)?;
        Ok(vec![
            Cell::Real(nu),
            Cell::Real(x),
            Cell::Text(regime),
            Cell::Real(geo.lower),
            Cell::Real(geo.upper),
            Cell::opt(l),
            Cell::opt(u),
            Cell::Real(oracle),
            Cell::Real(cert.tail_bound),
        ])
    })?;
    Ok(render_table(&HSUM_HEADER, &body))
}

pub fn scaled_bessel_csv(a: &SweepArgs) -> Result<String, CliError> {
    check_tol("tol", a.tol)?;
    let pts = resolve_points(a, 3, Var::X, Some(0.0))?;
    let body = rows(&pts, |&(nu, x)| {
        if nu < 0.0 || nu.fract() != 0.0 {
            return usage(format!("scaled-bessel needs an integer --nu, got {nu}"));
        }
        let p = point(nu, x)?;
        let (oracle, _) = scaled_bessel_i(p, a.tol)?;
        let bounds = scaled_bessel_bounds_int(nu as u64, x)?;
        let asymptotic = (x > 0.0).then(|| 1.0 / (2.0 * std::f64::consts::PI * x).sqrt());
        let fallback = matches!(bounds.source, HazardSource::GeometricFallback);
        Ok(vec![
            Cell::Real(x),
            Cell::Real(oracle.value),
            Cell::opt(asymptotic),
            Cell::Real(bounds.interval.lower),
            Cell::Real(bounds.interval.upper),
            Cell::Int(fallback as i64),
        ])
    })?;
    Ok(render_table(&SCALED_BESSEL_HEADER, &body))
}

fn params(a: &SkellamArgs) -> Result<SkellamParams, CliError> {
    let (l1, l2) = match (a.lambda, a.l1, a.l2) {
        (Some(l), None, None) => (l, l),
        (None, Some(l1), Some(l2)) => (l1, l2),
        (Some(_), _, _) => return usage("--lambda excludes --l1/--l2"),
        _ => return usage("give --lambda, or both --l1 and --l2"),
    };
    Ok(SkellamParams::new(l1, l2)?)
}

/// The integer sweep: `--grid` if given, else the single value.
fn integers(
    grid: Option<GridRange>,
    single: Option<i64>,
    flag: &str,
) -> Result<Vec<i64>, CliError> {
    match (grid, single) {
        (Some(g), None) => g.integer_values().map_err(CliError::Usage),
        (None, Some(v)) => Ok(vec![v]),
        (Some(_), Some(_)) => usage(format!("--grid excludes --{flag}")),
        (None, None) => usage(format!("give --{flag} or --grid")),
    }
}

fn thresholds(a: &SkellamArgs) -> Result<Vec<u64>, CliError> {
    integers(a.grid, a.nu.map(|v| v as i64), "nu")?
        .into_iter()
        .map(|v| {
            u64::try_from(v)
                .map_err(|_| CliError::Usage(format!("--nu must be non-negative, got {v}")))
        })
        .collect()
}

fn symmetric_lambda(p: SkellamParams) -> Result<f64, CliError> {
    if p.lambda1() != p.lambda2() {
        return usage("tail quantities need equal rates; use --lambda");
    }
    Ok(p.lambda1())
}

pub fn skellam_csv(cmd: &SkellamCommand) -> Result<(String, Option<&Path>), CliError> {
    let a = match cmd {
        SkellamCommand::Pmf(a)
        | SkellamCommand::PmfBounds(a)
        | SkellamCommand::Tail(a)
        | SkellamCommand::Concentration(a) => a,
    };
    check_tol("tol", a.tol)?;
    let p = params(a)?;
    let csv = match cmd {
        SkellamCommand::Pmf(_) => {
            let ns = integers(a.grid, a.n, "n")?;
            let body = rows(&ns, |&n| {
                let v = skellam_log_pmf(p, n)?.exp();
                Ok(vec![
                    Cell::Real(p.lambda1()),
                    Cell::Real(p.lambda2()),
                    Cell::Int(n),
                    Cell::Real(v),
                ])
            })?;
            render_table(&["l1", "l2", "n", "pmf"], &body)
        }
        SkellamCommand::PmfBounds(_) => {
            let ns = integers(a.grid, a.n, "n")?;
            let body = rows(&ns, |&n| {
                let iv = skellam_pmf_bounds(p, n)?;
                let v = skellam_log_pmf(p, n)?.exp();
                Ok(vec![
                    Cell::Real(p.lambda1()),
                    Cell::Real(p.lambda2()),
                    Cell::Int(n),
                    Cell::Real(iv.lower),
                    Cell::Real(iv.upper),
                    Cell::Real(v),
                ])
            })?;
            render_table(&["l1", "l2", "n", "lower", "upper", "oracle"], &body)
        }
        SkellamCommand::Tail(_) => {
            let lambda = symmetric_lambda(p)?;
            let nus = thresholds(a)?;
            let body = rows(&nus, |&nu| {
                let (t, cert) = skellam_tail_oracle(p, nu, a.tol)?;
                Ok(vec![
                    Cell::Real(lambda),
                    Cell::Int(nu as i64),
                    Cell::Real(t),
                    Cell::Real(cert.tail_bound),
                ])
            })?;
            render_table(&["lambda", "nu", "oracle", "tail_bound"], &body)
        }
        SkellamCommand::Concentration(_) => {
            let lambda = symmetric_lambda(p)?;
            let nus = thresholds(a)?;
            let body = rows(&nus, |&nu| {
                let r = concentration_bounds(nu, lambda)?;
                let (t, _) = skellam_tail_oracle(p, nu, a.tol)?;
                Ok(vec![
                    Cell::Real(lambda),
                    Cell::Int(nu as i64),
                    Cell::Real(r.interval.lower),
                    Cell::Real(r.interval.upper),
                    Cell::Real(t),
                    Cell::Int(r.upper_clamped as i64),
                ])
            })?;
            render_table(
                &["lambda", "nu", "lower", "upper", "oracle", "upper_clamped"],
                &body,
            )
        }
    };
    Ok((csv, a.out.as_deref()))
}
