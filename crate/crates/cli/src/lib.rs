//! Library side of the `besselbounds` binary: argument definitions, grid
//! handling, CSV rendering and the verification sweep.

pub mod commands;
pub mod csv;
pub mod grid;
pub mod verify;

use std::io::Write;
use std::path::{Path, PathBuf};

use bessel_bounds::{BoundsError, DEFAULT_TOL};
use clap::{Args, Parser, Subcommand};

pub use grid::{GridRange, GridSpec, Var};
pub use verify::{Preset, SweepReport, Violation};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("verification failed with {0} violation(s)")]
    Verification(usize),
    #[error("{0}")]
    NonConvergence(BoundsError),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 1,
            CliError::Verification(_) => 2,
            CliError::NonConvergence(_) => 3,
        }
    }
}

impl From<BoundsError> for CliError {
    fn from(e: BoundsError) -> Self {
        match e {
            BoundsError::NonConvergence { .. } => CliError::NonConvergence(e),
            other => CliError::Usage(other.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "besselbounds",
    version,
    about = "Bounds on Bessel ratios, the hazard sum H(nu, x), exp(-x) I_nu(x) and Skellam probabilities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Amos and exponential bounds on I_{nu+1}(x) / I_nu(x).
    Ratio(SweepArgs),
    /// Geometric and two-regime bounds on H(nu, x).
    Hsum(HsumArgs),
    /// Bounds on exp(-x) I_nu(x) for integer nu.
    ScaledBessel(SweepArgs),
    /// Skellam mass function, hazard and tail quantities.
    Skellam {
        #[command(subcommand)]
        command: SkellamCommand,
    },
    /// Check every bound against its oracle over preset grids.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Reproduce the grid of a figure (1 for ratio, 2 for hsum, 3 for scaled-bessel).
    #[arg(long)]
    pub figure: Option<u8>,
    #[arg(long)]
    pub nu: Option<f64>,
    #[arg(long)]
    pub x: Option<f64>,
    /// Sweep `start:stop:step` instead of a single point.
    #[arg(long)]
    pub grid: Option<GridRange>,
    /// Coordinate swept by --grid.
    #[arg(long, value_enum)]
    pub vary: Option<Var>,
    /// Oracle tolerance.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct HsumArgs {
    #[command(flatten)]
    pub sweep: SweepArgs,
    /// Truncation tolerance of the H oracle; 0.01 under --figure 2.
    #[arg(long)]
    pub eps: Option<f64>,
}

#[derive(Debug, Args)]
pub struct SkellamArgs {
    #[arg(long)]
    pub l1: Option<f64>,
    #[arg(long)]
    pub l2: Option<f64>,
    /// Shorthand for --l1 L --l2 L.
    #[arg(long)]
    pub lambda: Option<f64>,
    /// Value of W (pmf, pmf-bounds).
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<i64>,
    /// Threshold in P[|W| > nu] (tail, concentration).
    #[arg(long)]
    pub nu: Option<u64>,
    /// Integer sweep of n or nu.
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Option<GridRange>,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum SkellamCommand {
    /// P[W = n].
    Pmf(SkellamArgs),
    /// Bounds on P[W = n].
    PmfBounds(SkellamArgs),
    /// P[|W| > nu] for equal rates.
    Tail(SkellamArgs),
    /// Bounds on P[|W| > nu] for equal rates.
    Concentration(SkellamArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Preset::Full)]
    pub preset: Preset,
    /// Relative slack allowed for oracle error.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Replace the nu range of the ratio and H sweeps.
    #[arg(long)]
    pub grid: Option<GridRange>,
    /// Write the sweep report as JSON.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Multiply every upper bound by this factor (harness self-test).
    #[arg(long, hide = true)]
    pub perturb_upper: Option<f64>,
}

/// Write to `path`, or to stdout when absent.
pub fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Ratio(a) => {
            let csv = commands::ratio_csv(&a)?;
            emit(a.out.as_deref(), &csv)
        }
        Command::Hsum(a) => {
            let csv = commands::hsum_csv(&a)?;
            emit(a.sweep.out.as_deref(), &csv)
        }
        Command::ScaledBessel(a) => {
            let csv = commands::scaled_bessel_csv(&a)?;
            emit(a.out.as_deref(), &csv)
        }
        Command::Skellam { command } => {
            let (csv, out) = commands::skellam_csv(&command)?;
            emit(out, &csv)
        }
        Command::Verify(a) => {
            let report = verify::run_verify(&a)?;
            let mut summary = String::new();
            for c in &report.checks {
                summary.push_str(&format!(
                    "{:<24} points={:<8} violations={}\n",
                    c.name, c.points_checked, c.violations
                ));
            }
            summary.push_str(&format!(
                "total points={} violations={} max_relative_slack={:e}\n",
                report.points_checked,
                report.violations.len(),
                report.max_relative_slack
            ));
            emit(None, &summary)?;
            if let Some(p) = &a.report {
                let json = serde_json::to_string_pretty(&report).expect("report serialises");
                emit(Some(p), &(json + "\n"))?;
            }
            if report.violations.is_empty() {
                Ok(())
            } else {
                Err(CliError::Verification(report.violations.len()))
            }
        }
    }
}
