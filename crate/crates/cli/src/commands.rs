use std::fmt::Write as _;

use dirac_nonlocality::transform::{
    b0_approx, b0_regular, d0, dz_regular, log_grid, moment, s0, sz, t0, tz, uniform_grid,
};
use dirac_nonlocality::variance::{variance_closed, variance_oracle};
use dirac_nonlocality::{PacketSpec, QuadratureSpec, TransformKind};
use rayon::prelude::*;

use crate::args::{Command, Packet, RunConfig, TransformArg, R_MIN, SWEEP_RANGE};
use crate::error::CliError;
use crate::output::{Cell, Table};

/// Entrywise bounds on the moment matrices.
const MOMENT_BOUND: [f64; 2] = [1e-8, 1e-6];
/// Closed form against oracle, relative.
const VARIANCE_BOUND: f64 = 1e-4;
const NORM_BOUND: f64 = 1e-8;

pub fn run(cfg: &RunConfig) -> Result<Table, CliError> {
    match cfg.command {
        Command::Moments => run_moments(cfg),
        Command::Profile => match cfg.packet {
            Packet::Gaussian => run_profile(cfg),
            Packet::Delta => run_delta_profile(cfg),
        },
        Command::Variance => run_variance(cfg),
        Command::Sweep => run_variance_sweep(cfg),
    }
}

fn kinds(t: TransformArg) -> Vec<TransformKind> {
    match t {
        TransformArg::Fw => vec![TransformKind::Fw],
        TransformArg::Mo => vec![TransformKind::Mo],
        TransformArg::Both => TransformKind::ALL.to_vec(),
    }
}

fn quad_spec(cfg: &RunConfig) -> QuadratureSpec {
    QuadratureSpec::with_tolerances(cfg.tol, cfg.tol)
}

pub fn run_moments(cfg: &RunConfig) -> Result<Table, CliError> {
    let mut table = Table::new(&["transform", "order", "row", "col", "re", "im", "ref_re", "ref_im"]);
    let mut breaches = String::new();
    for kind in kinds(cfg.transform) {
        for (slot, order) in [0u8, 2].into_iter().enumerate() {
            let m = moment(kind, order)?;
            let bound = MOMENT_BOUND[slot];
            eprintln!(
                "{} M({order}): max deviation {:.3e} (bound {bound:.0e})",
                kind.label(),
                m.max_deviation
            );
            for i in 0..4 {
                for j in 0..4 {
                    let (v, r) = (m.matrix[(i, j)], m.analytic_reference[(i, j)]);
                    if (v - r).norm() > bound {
                        let _ = writeln!(
                            breaches,
                            "{} M({order}) entry ({},{}): got {v}, expected {r}",
                            kind.label(),
                            i + 1,
                            j + 1
                        );
                    }
                    table.push(vec![
                        kind.label().into(),
                        f64::from(order).into(),
                        ((i + 1) as f64).into(),
                        ((j + 1) as f64).into(),
                        v.re.into(),
                        v.im.into(),
                        r.re.into(),
                        r.im.into(),
                    ]);
                }
            }
        }
    }
    if breaches.is_empty() {
        Ok(table)
    } else {
        Err(CliError::Tolerance(breaches))
    }
}

fn profile_grid(cfg: &RunConfig) -> Result<Vec<f64>, CliError> {
    Ok(uniform_grid(R_MIN, cfg.r_max, cfg.points)?)
}

/// Columns `r, f, 2T0, S0, 2Tz, Sz`; the axial columns use `z = r` and
/// carry the imaginary parts (both are purely imaginary).
pub fn run_profile(cfg: &RunConfig) -> Result<Table, CliError> {
    let packet = PacketSpec::gaussian(cfg.d)?;
    let spec = quad_spec(cfg);
    let grid = profile_grid(cfg)?;
    let rows = grid
        .par_iter()
        .map(|&r| -> Result<Vec<Cell>, dirac_nonlocality::Error> {
            Ok(vec![
                r.into(),
                packet.position_amplitude(r)?.into(),
                (2.0 * t0(&packet, r, &spec)?).into(),
                s0(&packet, r, &spec)?.into(),
                (2.0 * tz(&packet, r, &spec)?.im).into(),
                sz(&packet, r, &spec)?.im.into(),
            ])
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut table = Table::new(&["r", "f", "2T0", "S0", "2Tz", "Sz"]);
    rows.into_iter().for_each(|row| table.push(row));
    Ok(table)
}

/// Point-source profiles: `D0`, the regular part of `Dz` on the axis
/// (imaginary part), the exact regular `B0` and its constant-`C0` form.
pub fn run_delta_profile(cfg: &RunConfig) -> Result<Table, CliError> {
    let spec = quad_spec(cfg);
    let grid = profile_grid(cfg)?;
    let c0 = cfg.c0;
    let rows = grid
        .par_iter()
        .map(|&r| -> Result<Vec<Cell>, dirac_nonlocality::Error> {
            Ok(vec![
                r.into(),
                d0(r)?.into(),
                dz_regular(r, &spec)?.im.into(),
                b0_regular(r, &spec)?.into(),
                b0_approx(r, c0)?.into(),
            ])
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut table = Table::new(&["r", "D0", "Dz", "B0", "B0_c0"]);
    rows.into_iter().for_each(|row| table.push(row));
    Ok(table)
}

pub fn run_variance(cfg: &RunConfig) -> Result<Table, CliError> {
    let mut table = Table::new(&["transform", "d", "V_closed", "V_oracle", "V_closed/d2", "rel_diff", "norm"]);
    let mut breaches = String::new();
    let d = cfg.d;
    let results = kinds(cfg.transform)
        .into_par_iter()
        .map(|kind| Ok((kind, variance_closed(kind, d)?, variance_oracle(kind, d)?)))
        .collect::<Result<Vec<_>, dirac_nonlocality::Error>>()?;
    for (kind, closed, oracle) in results {
        let rel = (closed.value - oracle.value).abs() / closed.value;
        if !(rel <= VARIANCE_BOUND) {
            let _ = writeln!(breaches, "{}: closed {} vs oracle {} (rel {rel:.3e})", kind.label(), closed.value, oracle.value);
        }
        if !((oracle.norm_check - 1.0).abs() <= NORM_BOUND) {
            let _ = writeln!(breaches, "{}: norm {}", kind.label(), oracle.norm_check);
        }
        table.push(vec![
            kind.label().into(),
            d.into(),
            closed.value.into(),
            oracle.value.into(),
            closed.ratio().into(),
            rel.into(),
            oracle.norm_check.into(),
        ]);
    }
    if breaches.is_empty() {
        Ok(table)
    } else {
        Err(CliError::Tolerance(breaches))
    }
}

/// Narrow-packet limit is checked at this width; at the first grid point
/// (d = 0.05) the curves are still well below 7/2.
const NARROW_WIDTH: f64 = 1e-3;

/// `d, V_MO/d^2, V_FW/d^2, V_G/d^2` over a log grid on `[0.05, 20]`. Both
/// transforms are always computed, since the ordering check needs both.
pub fn run_variance_sweep(cfg: &RunConfig) -> Result<Table, CliError> {
    let grid = log_grid(SWEEP_RANGE.0, SWEEP_RANGE.1, cfg.points)?;
    let rows = grid
        .par_iter()
        .map(|&d| {
            let mo = variance_closed(TransformKind::Mo, d)?.ratio();
            let fw = variance_closed(TransformKind::Fw, d)?.ratio();
            Ok((d, mo, fw))
        })
        .collect::<Result<Vec<_>, dirac_nonlocality::Error>>()?;

    let mut breaches = String::new();
    for &(d, mo, fw) in &rows {
        if !(fw < mo) {
            let _ = writeln!(breaches, "d = {d}: V_FW/d2 = {fw} not below V_MO/d2 = {mo}");
        }
        if mo < 1.5 || fw < 1.5 {
            let _ = writeln!(breaches, "d = {d}: below the Gaussian floor 1.5");
        }
    }
    for (a, b) in rows.iter().zip(rows.iter().skip(1)) {
        if !(b.1 < a.1 && b.2 < a.2) {
            let _ = writeln!(breaches, "not decreasing between d = {} and d = {}", a.0, b.0);
        }
    }
    let &(_, mo_last, fw_last) = rows.last().expect("grid has at least two points");
    for (label, v) in [("MO", mo_last), ("FW", fw_last)] {
        if (v / 1.5 - 1.0).abs() > 0.01 {
            let _ = writeln!(breaches, "{label} at d = {}: {v} not within 1% of 1.5", SWEEP_RANGE.1);
        }
    }
    for kind in TransformKind::ALL {
        let v = variance_closed(kind, NARROW_WIDTH)?.ratio();
        if (v / 3.5 - 1.0).abs() > 0.005 {
            let _ = writeln!(breaches, "{} at d = {NARROW_WIDTH}: {v} not within 0.5% of 3.5", kind.label());
        }
    }
    if !breaches.is_empty() {
        return Err(CliError::Tolerance(breaches));
    }

    let mut table = Table::new(&["d", "V_MO/d2", "V_FW/d2", "V_G/d2"]);
    for (d, mo, fw) in rows {
        table.push(vec![d.into(), mo.into(), fw.into(), 1.5.into()]);
    }
    Ok(table)
}
