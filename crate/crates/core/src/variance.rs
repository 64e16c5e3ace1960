//! Normalized variances `V = <r^2> / <r^0>` of transformed Gaussian packets.
//!
//! The closed forms are written in terms of the `A_nu^0` integrals. The
//! oracle works directly from the operator matrices: it builds the
//! momentum-space spinor `phi(p)`, and uses `<r^0> = int |phi|^2` and
//! `<r^2> = int sum_j |d phi / d p_j|^2` (both over `d^3p / (2 pi)^3`),
//! which is `-int phi^dag lap_p phi` after one integration by parts.

use core::f64::consts::PI;

use alloc::vec::Vec;
use libm::{log, sqrt};
use num_complex::Complex64;

use crate::dirac::{dirac_matrices, hamiltonian_prime, u_fw, v_op, FourSpinor, Momentum3};
use crate::fd::first_derivative;
use crate::special::{a_integral_closed, AIntegralParams};
use crate::transform::{PacketSpec, TransformKind};
use crate::{Error, Result};

const SQRT_PI: f64 = 1.772_453_850_905_516_027_298_167_483_341_145_2;

/// Simpson intervals of the fine oracle grid; the coarse grid uses half.
pub const ORACLE_INTERVALS: usize = 4000;
/// Allowed relative disagreement between the two oracle grids.
pub const ORACLE_GRID_TOL: f64 = 1e-4;

/// Gauss-Legendre nodes and weights on [-1, 1], 8 points.
const GL8: [(f64, f64); 8] = [
    (-0.960_289_856_497_536_2, 0.101_228_536_290_376_26),
    (-0.796_666_477_413_626_7, 0.222_381_034_453_374_47),
    (-0.525_532_409_916_329_0, 0.313_706_645_877_887_3),
    (-0.183_434_642_495_649_8, 0.362_683_783_378_362_0),
    (0.183_434_642_495_649_8, 0.362_683_783_378_362_0),
    (0.525_532_409_916_329_0, 0.313_706_645_877_887_3),
    (0.796_666_477_413_626_7, 0.222_381_034_453_374_47),
    (0.960_289_856_497_536_2, 0.101_228_536_290_376_26),
];

#[derive(Clone, Debug, PartialEq)]
pub struct VarianceResult {
    pub kind: TransformKind,
    pub d: f64,
    /// `<r^2> / <r^0>`, in Compton wavelengths squared.
    pub value: f64,
    /// `<r^0>`, which should be 1.
    pub norm_check: f64,
    pub breakdown: Vec<(&'static str, f64)>,
}

impl VarianceResult {
    /// `V / d^2`.
    pub fn ratio(&self) -> f64 {
        self.value / (self.d * self.d)
    }

    pub fn component(&self, label: &str) -> Option<f64> {
        self.breakdown.iter().find(|(l, _)| *l == label).map(|&(_, v)| v)
    }
}

fn check_width(d: f64) -> Result<()> {
    if d > 0.0 && d.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidInput("packet width must be positive and finite"))
    }
}

fn a(nu: f64, d: f64) -> Result<f64> {
    a_integral_closed(&AIntegralParams::new(nu, 0, d)?)
}

/// `V_MO = <r^2>_11 + <r^2>_22` with `<r^2>_11 = 3d^2/4` and
/// `<r^2>_22 = 11 d^2 / 4 - 2 d^2 (d / sqrt pi) (A_1 + A_2)`.
pub fn variance_mo_closed(d: f64) -> Result<VarianceResult> {
    check_width(d)?;
    let d2 = d * d;
    let r2_11 = 0.75 * d2;
    let r2_22 = 2.75 * d2 - 2.0 * d2 * (d / SQRT_PI) * (a(1.0, d)? + a(2.0, d)?);
    Ok(VarianceResult {
        kind: TransformKind::Mo,
        d,
        value: r2_11 + r2_22,
        norm_check: 1.0,
        breakdown: alloc::vec![
            ("r0_11", 0.5),
            ("r0_22", 0.5),
            ("r2_11", r2_11),
            ("r2_22", r2_22),
            ("r0_12", 0.0),
            ("r2_12", 0.0),
        ],
    })
}

/// `V_FW = 7 d^2 / 2 + d^2 (d / sqrt pi) (A_1 - A_2 - 4 A_{1/2})`.
pub fn variance_fw_closed(d: f64) -> Result<VarianceResult> {
    check_width(d)?;
    let d2 = d * d;
    let (a_half, a1, a2) = (a(0.5, d)?, a(1.0, d)?, a(2.0, d)?);
    let correction = d2 * (d / SQRT_PI) * (a1 - a2 - 4.0 * a_half);
    Ok(VarianceResult {
        kind: TransformKind::Fw,
        d,
        value: 3.5 * d2 + correction,
        norm_check: 1.0,
        breakdown: alloc::vec![("r0", 1.0), ("r2_leading", 3.5 * d2), ("r2_correction", correction)],
    })
}

pub fn variance_closed(kind: TransformKind, d: f64) -> Result<VarianceResult> {
    match kind {
        TransformKind::Fw => variance_fw_closed(d),
        TransformKind::Mo => variance_mo_closed(d),
    }
}

/// Closed-form variances over `d_grid` (positive, strictly increasing).
pub fn variance_sweep(kind: TransformKind, d_grid: &[f64]) -> Result<Vec<VarianceResult>> {
    if d_grid.iter().any(|&d| !(d > 0.0)) || d_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidInput("d grid must be positive and strictly increasing"));
    }
    d_grid.iter().map(|&d| variance_closed(kind, d)).collect()
}

/// Momentum-space spinor split into (up to) two parts.
type Parts = fn(&Momentum3, f64, &Ctx) -> [FourSpinor; 2];

struct Ctx {
    packet: PacketSpec,
    beta: crate::Matrix4C,
    v_e1: FourSpinor,
}

impl Ctx {
    fn new(d: f64) -> Result<Self> {
        Ok(Ctx {
            packet: PacketSpec::gaussian(d)?,
            beta: dirac_matrices().beta,
            v_e1: v_op().apply(&FourSpinor::unit(0)),
        })
    }

    fn amplitude(&self, p: &Momentum3) -> f64 {
        // Width validated in `new`.
        self.packet.momentum_amplitude(sqrt(p.norm_sqr())).unwrap_or(0.0)
    }
}

/// `U_MO V e_1 f_p = (beta V e_1 + H'_p V e_1 / E_p) f_p / sqrt 2`.
fn mo_parts(p: &Momentum3, f: f64, ctx: &Ctx) -> [FourSpinor; 2] {
    let s = f * core::f64::consts::FRAC_1_SQRT_2;
    let first = ctx.beta.apply(&ctx.v_e1) * s;
    let second = (hamiltonian_prime(p) * (1.0 / p.energy())).apply(&ctx.v_e1) * s;
    [first, second]
}

fn fw_parts(p: &Momentum3, f: f64, _: &Ctx) -> [FourSpinor; 2] {
    [u_fw(p).apply(&FourSpinor::unit(0)) * f, FourSpinor::default()]
}

fn identity_parts(_: &Momentum3, f: f64, _: &Ctx) -> [FourSpinor; 2] {
    [FourSpinor::unit(0) * f, FourSpinor::default()]
}

/// Accumulated `<r^0>` and `<r^2>` blocks between the two parts.
#[derive(Clone, Copy, Default)]
struct Blocks {
    r0: [[Complex64; 2]; 2],
    r2: [[Complex64; 2]; 2],
}

impl Blocks {
    fn add_scaled(&mut self, other: &Blocks, w: f64) {
        for i in 0..2 {
            for j in 0..2 {
                self.r0[i][j] += other.r0[i][j] * w;
                self.r2[i][j] += other.r2[i][j] * w;
            }
        }
    }

    fn total(m: &[[Complex64; 2]; 2]) -> f64 {
        (m[0][0] + m[1][1] + m[0][1] + m[1][0]).re
    }
}

/// Angular integral of the blocks at radius `p`, without the `p^2` weight.
fn shell(parts: Parts, ctx: &Ctx, p: f64, h: f64) -> Blocks {
    let mut out = Blocks::default();
    for (mu, w) in GL8 {
        let sin_theta = sqrt(1.0 - mu * mu);
        let q = Momentum3::new(p * sin_theta, 0.0, p * mu);
        let eval = |q: Momentum3| parts(&q, ctx.amplitude(&q), ctx);
        let phi = eval(q);
        let mut grads = [[FourSpinor::default(); 3]; 2];
        for axis in 0..3 {
            let shifted = |t: f64| {
                let mut c = [q.x, q.y, q.z];
                c[axis] += t;
                let v = eval(Momentum3::new(c[0], c[1], c[2]));
                Pair(v[0], v[1])
            };
            let Pair(g0, g1) = first_derivative(shifted, 0.0, h);
            grads[0][axis] = g0;
            grads[1][axis] = g1;
        }
        for i in 0..2 {
            for j in 0..2 {
                out.r0[i][j] += phi[i].inner(&phi[j]) * w;
                let g: Complex64 = (0..3).map(|a| grads[i][a].inner(&grads[j][a])).sum();
                out.r2[i][j] += g * w;
            }
        }
    }
    out
}

#[derive(Clone, Copy)]
struct Pair(FourSpinor, FourSpinor);

impl core::ops::Add for Pair {
    type Output = Pair;
    fn add(self, o: Pair) -> Pair {
        Pair(self.0 + o.0, self.1 + o.1)
    }
}

impl core::ops::Sub for Pair {
    type Output = Pair;
    fn sub(self, o: Pair) -> Pair {
        Pair(self.0 - o.0, self.1 - o.1)
    }
}

impl core::ops::Mul<f64> for Pair {
    type Output = Pair;
    fn mul(self, s: f64) -> Pair {
        Pair(self.0 * s, self.1 * s)
    }
}

/// Simpson sums over `p = k_max s^2` on `intervals` and `intervals / 2`.
fn integrate_blocks(parts: Parts, d: f64, intervals: usize) -> Result<(Blocks, Blocks)> {
    let ctx = Ctx::new(d)?;
    let k_max = sqrt(2.0 * log(1e18)) / d;
    let h = 1e-2 * (1.0f64).min(1.0 / d);
    let ds = 1.0 / intervals as f64;
    // Solid angle 2 pi (azimuth) over (2 pi)^3, times the Jacobian 2 k_max s.
    let angular = 2.0 * PI / (8.0 * PI * PI * PI);
    let mut fine = Blocks::default();
    let mut coarse = Blocks::default();
    for n in 0..=intervals {
        let s = n as f64 * ds;
        let p = k_max * s * s;
        let weight = angular * p * p * 2.0 * k_max * s;
        if weight == 0.0 {
            continue;
        }
        let b = shell(parts, &ctx, p, h);
        let edge = n == 0 || n == intervals;
        let wf = if edge { 1.0 } else if n % 2 == 1 { 4.0 } else { 2.0 };
        fine.add_scaled(&b, weight * wf * ds / 3.0);
        if n % 2 == 0 {
            let m = n / 2;
            let wc = if edge { 1.0 } else if m % 2 == 1 { 4.0 } else { 2.0 };
            coarse.add_scaled(&b, weight * wc * 2.0 * ds / 3.0);
        }
    }
    Ok((fine, coarse))
}

fn oracle_with(parts: Parts, d: f64) -> Result<(Blocks, f64)> {
    check_width(d)?;
    let (fine, coarse) = integrate_blocks(parts, d, ORACLE_INTERVALS)?;
    let v_fine = Blocks::total(&fine.r2) / Blocks::total(&fine.r0);
    let v_coarse = Blocks::total(&coarse.r2) / Blocks::total(&coarse.r0);
    if !((v_fine - v_coarse).abs() <= ORACLE_GRID_TOL * v_fine.abs()) {
        return Err(Error::GridResolution {
            coarse: v_coarse,
            fine: v_fine,
        });
    }
    Ok((fine, v_fine))
}

/// Independent momentum-space evaluation of the normalized variance.
///
/// The MO breakdown reports the `beta` part (label `1`) and the `H'/E`
/// part (label `2`) separately, including the magnitudes of the cross terms.
pub fn variance_oracle(kind: TransformKind, d: f64) -> Result<VarianceResult> {
    let parts: Parts = match kind {
        TransformKind::Fw => fw_parts,
        TransformKind::Mo => mo_parts,
    };
    let (b, value) = oracle_with(parts, d)?;
    let norm = Blocks::total(&b.r0);
    let breakdown = match kind {
        TransformKind::Fw => alloc::vec![("r0", norm), ("r2", Blocks::total(&b.r2))],
        TransformKind::Mo => alloc::vec![
            ("r0_11", b.r0[0][0].re),
            ("r0_22", b.r0[1][1].re),
            ("r2_11", b.r2[0][0].re),
            ("r2_22", b.r2[1][1].re),
            ("r0_12", b.r0[0][1].norm()),
            ("r2_12", b.r2[0][1].norm()),
        ],
    };
    Ok(VarianceResult {
        kind,
        d,
        value,
        norm_check: norm,
        breakdown,
    })
}

/// The oracle applied to the untransformed packet: `3 d^2 / 2`.
pub fn identity_variance_oracle(d: f64) -> Result<f64> {
    Ok(oracle_with(identity_parts, d)?.1)
}
