use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "dirac-nl", version, about = "Non-locality of the FW and MO transformations of the free Dirac equation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Copy, Subcommand, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Zeroth and second kernel moments against their closed forms.
    Moments,
    /// Radial and axial profiles of the transformed packet.
    Profile,
    /// Normalized variance at one width: closed form against the oracle.
    Variance,
    /// V/d^2 over a log grid of widths.
    Sweep,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum TransformArg {
    Fw,
    Mo,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Packet {
    Gaussian,
    Delta,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = TransformArg::Both, global = true)]
    pub transform: TransformArg,
    /// Packet width in Compton wavelengths.
    #[arg(long, default_value_t = 1.0, global = true)]
    pub d: f64,
    /// Largest radius of the profile grid.
    #[arg(long = "rmax", default_value_t = 6.0, global = true)]
    pub r_max: f64,
    /// Grid size (default 300 for profile, 60 for sweep).
    #[arg(long, global = true)]
    pub points: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,
    /// Absolute and relative quadrature tolerance.
    #[arg(long, default_value_t = 1e-10, global = true)]
    pub tol: f64,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Constant replacing G(k) in the approximate point-source profile.
    #[arg(long, default_value_t = 0.457, global = true)]
    pub c0: f64,
    /// Initial function for `profile`.
    #[arg(long, value_enum, default_value_t = Packet::Gaussian, global = true)]
    pub packet: Packet,
}

/// Validated settings of one run.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: Command,
    pub transform: TransformArg,
    pub d: f64,
    pub r_max: f64,
    pub points: usize,
    pub format: Format,
    pub tol: f64,
    pub output_path: Option<String>,
    pub c0: f64,
    pub packet: Packet,
}

/// First radius of the profile grid.
pub const R_MIN: f64 = 0.02;
pub const SWEEP_RANGE: (f64, f64) = (0.05, 20.0);

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, String> {
        let c = cli.common;
        let points = c.points.unwrap_or(match cli.command {
            Command::Sweep => 60,
            _ => 300,
        });
        if points < 2 {
            return Err(format!("--points must be at least 2, got {points}"));
        }
        if !(c.d > 0.0 && c.d.is_finite()) {
            return Err(format!("--d must be positive, got {}", c.d));
        }
        if !(c.r_max > R_MIN && c.r_max.is_finite()) {
            return Err(format!("--rmax must exceed {R_MIN}, got {}", c.r_max));
        }
        if !(c.tol > 0.0 && c.tol < 1.0) {
            return Err(format!("--tol must lie in (0, 1), got {}", c.tol));
        }
        if !(0.40..=0.52).contains(&c.c0) {
            return Err(format!("--c0 must lie in [0.40, 0.52], got {}", c.c0));
        }
        Ok(RunConfig {
            command: cli.command,
            transform: c.transform,
            d: c.d,
            r_max: c.r_max,
            points,
            format: c.format,
            tol: c.tol,
            output_path: c.out.map(|p| p.display().to_string()),
            c0: c.c0,
            packet: c.packet,
        })
    }
}
