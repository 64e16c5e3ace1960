//! Kernel moments and transformed-function profiles.
//!
//! Every profile is a 3D Fourier transform `int exp(i k.r) F(k) d^3k / (2 pi)^3`
//! of a radial momentum-space function, reduced to one radial integral. The
//! Gaussian-packet integrals are named after the spinor entries they build:
//!
//! * `T0 = FT[f_p / (2 E)]` and `Tz = FT[p_z f_p / (2 E)] = -i dT0/dz` (MO),
//! * `S0 = FT[f_p (E + 1) / N]`, `S_aux = FT[f_p / N]` and
//!   `Sz = FT[p_z f_p / N] = -i dS_aux/dz` (FW), with `N = sqrt(2E(E+1))`.
//!
//! For a point-like input the MO spinor is built from `D0 = FT[1/(2E)]` and
//! `D_j = FT[p_j / (2E)]`; the FW upper entry is `B0 = FT[(E + 1)/N]`.
//! Distributional pieces (`delta(r)`, `delta(rho)`) are reported as
//! [`SingularTerm`]s and never sampled.

use core::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};

use alloc::vec::Vec;
use libm::{exp, fabs, log, pow, sqrt};
use num_complex::Complex64;

use crate::dirac::{dirac_matrices, u_fw, u_mo, Matrix4C, Momentum3};
use crate::fd::second_derivative;
use crate::quadrature::{
    integrate_adaptive_with_breaks, integrate_oscillatory, sinc, spherical_j1, QuadratureSpec,
};
use crate::special::{bessel_k, bessel_k0, bessel_k1};
use crate::{Error, FourSpinor, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `C0 = 0.457`, midway between `G(0) = 1/(1 + sqrt 2)` and `G(inf) = 1/2`.
pub const DEFAULT_C0: f64 = 0.457;
/// Accepted range for the constant replacing `G(k)`.
pub const C0_RANGE: (f64, f64) = (0.40, 0.52);

/// Finite-difference steps for the second moments.
const MOMENT_STEP: f64 = 1e-2;

/// The Gaussian factor `exp(-k^2 d^2 / 2)` is below `1e-18` beyond
/// `sqrt(2 ln 1e18) / d`.
fn envelope_cutoff(d: f64) -> f64 {
    sqrt(2.0 * log(1e18)) / d
}

/// Half-width of the `eta` range: `exp(-36)` is far below any tolerance.
const ETA_MAX: f64 = 6.0;

/// Upper limit of the remainder integral in [`b0_regular`]; the integrand
/// falls off as `k^-4`, so the neglected tail is below `1e-9`.
const B0_K_MAX: f64 = 400.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TransformKind {
    Fw,
    Mo,
}

impl TransformKind {
    pub const ALL: [TransformKind; 2] = [TransformKind::Fw, TransformKind::Mo];

    /// The momentum-space unitary: `U_FW(p)`, or `U_MO(p)` (without the
    /// constant `V` step, which does not contribute to the moments' shape).
    pub fn unitary(self, p: &Momentum3) -> Matrix4C {
        match self {
            TransformKind::Fw => u_fw(p),
            TransformKind::Mo => u_mo(p),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            TransformKind::Fw => "FW",
            TransformKind::Mo => "MO",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PacketKind {
    Gaussian,
    Delta,
}

/// Initial function: a normalized Gaussian of width `d`, or `delta(r)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PacketSpec {
    pub d: f64,
    pub kind: PacketKind,
}

impl PacketSpec {
    pub fn gaussian(d: f64) -> Result<Self> {
        if !(d > 0.0 && d.is_finite()) {
            return Err(Error::InvalidInput("packet width must be positive and finite"));
        }
        Ok(PacketSpec {
            d,
            kind: PacketKind::Gaussian,
        })
    }

    pub fn delta() -> Self {
        PacketSpec {
            d: 0.0,
            kind: PacketKind::Delta,
        }
    }

    fn width(&self) -> Result<f64> {
        match self.kind {
            PacketKind::Gaussian => Ok(self.d),
            PacketKind::Delta => Err(Error::InvalidInput("operation needs a Gaussian packet")),
        }
    }

    /// `f(r) = exp(-r^2 / 2d^2) / (pi^{3/4} d^{3/2})`, normalized so that
    /// `int |f|^2 d^3r = 1`.
    pub fn position_amplitude(&self, r: f64) -> Result<f64> {
        let d = self.width()?;
        Ok(exp(-r * r / (2.0 * d * d)) / (pow(PI, 0.75) * pow(d, 1.5)))
    }

    /// `f_p = (2 d sqrt(pi))^{3/2} exp(-p^2 d^2 / 2)`.
    pub fn momentum_amplitude(&self, p: f64) -> Result<f64> {
        let d = self.width()?;
        Ok(pow(2.0 * d * sqrt(PI), 1.5) * exp(-p * p * d * d / 2.0))
    }

    /// Momentum beyond which `f_p` is below `1e-18` of its peak.
    pub fn momentum_cutoff(&self) -> Result<f64> {
        Ok(envelope_cutoff(self.width()?))
    }
}

/// Zeroth or second moment of a transformation kernel.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MomentResult {
    pub kind: TransformKind,
    pub order: u8,
    pub matrix: Matrix4C,
    pub analytic_reference: Matrix4C,
    pub max_deviation: f64,
}

/// `M^(0) = U(0)` and `M^(2) = -lap_p U(p)|_{p=0}` (in units of the Compton
/// wavelength squared), the latter by Richardson-extrapolated central
/// differences with steps `1e-2` and `5e-3` along each axis.
pub fn moment(kind: TransformKind, order: u8) -> Result<MomentResult> {
    let m = dirac_matrices();
    let (matrix, analytic_reference) = match order {
        0 => {
            let reference = match kind {
                TransformKind::Fw => Matrix4C::identity(),
                TransformKind::Mo => (m.beta + m.delta) * FRAC_1_SQRT_2,
            };
            (kind.unitary(&Momentum3::zero()), reference)
        }
        2 => {
            let axes = [
                |t: f64| Momentum3::new(t, 0.0, 0.0),
                |t: f64| Momentum3::new(0.0, t, 0.0),
                |t: f64| Momentum3::new(0.0, 0.0, t),
            ];
            let mut lap = Matrix4C::zero();
            for axis in axes {
                lap = lap + second_derivative(|t| kind.unitary(&axis(t)), 0.0, MOMENT_STEP);
            }
            let reference = match kind {
                TransformKind::Fw => Matrix4C::identity() * 0.75,
                TransformKind::Mo => m.delta * (3.0 * FRAC_1_SQRT_2),
            };
            (-lap, reference)
        }
        _ => return Err(Error::InvalidInput("moment order must be 0 or 2")),
    };
    Ok(MomentResult {
        kind,
        order,
        matrix,
        analytic_reference,
        max_deviation: matrix.max_abs_diff(&analytic_reference),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProfileKind {
    T0,
    Tz,
    S0,
    Sz,
    D0,
    B0Regular,
    DzRegular,
}

/// A distribution dropped from a sampled curve: `coefficient * delta(r)`
/// (point) or `coefficient * delta(rho) / z` (line along the z axis).
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SingularTerm {
    Point { coefficient: Complex64 },
    AxialLine { coefficient: Complex64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProfileCurve {
    pub which: ProfileKind,
    pub abscissa: Vec<f64>,
    pub values: Vec<Complex64>,
    pub packet: PacketSpec,
    pub singular: Option<SingularTerm>,
}

impl ProfileCurve {
    pub fn new(
        which: ProfileKind,
        abscissa: Vec<f64>,
        values: Vec<Complex64>,
        packet: PacketSpec,
        singular: Option<SingularTerm>,
    ) -> Result<Self> {
        if abscissa.len() != values.len() {
            return Err(Error::InvalidInput("abscissa and values differ in length"));
        }
        check_grid(&abscissa)?;
        if values.iter().any(|v| !(v.re.is_finite() && v.im.is_finite())) {
            return Err(Error::InvalidInput("profile values must be finite"));
        }
        Ok(ProfileCurve {
            which,
            abscissa,
            values,
            packet,
            singular,
        })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn real_parts(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.re).collect()
    }

    pub fn imag_parts(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.im).collect()
    }
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidInput("grid points must be finite"));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidInput("grid must be strictly increasing"));
    }
    Ok(())
}

/// `n` evenly spaced points from `a` to `b` inclusive.
pub fn uniform_grid(a: f64, b: f64, n: usize) -> Result<Vec<f64>> {
    if n < 2 || !(b > a) || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidInput("need n >= 2 and a < b"));
    }
    let step = (b - a) / (n - 1) as f64;
    Ok((0..n).map(|i| if i == n - 1 { b } else { a + step * i as f64 }).collect())
}

/// `n` log-spaced points from `a` to `b` inclusive, `0 < a < b`.
pub fn log_grid(a: f64, b: f64, n: usize) -> Result<Vec<f64>> {
    if !(a > 0.0) {
        return Err(Error::InvalidInput("log grid needs a positive start"));
    }
    let (la, lb) = (log(a), log(b));
    Ok(uniform_grid(la, lb, n)?
        .into_iter()
        .enumerate()
        .map(|(i, t)| match i {
            0 => a,
            _ if i == n - 1 => b,
            _ => exp(t),
        })
        .collect())
}

// ---------------------------------------------------------------------------
// Gaussian packet integrals
// ---------------------------------------------------------------------------

/// Position-space prefactor `(d sqrt(pi))^{3/2} / pi^2`.
fn gaussian_prefactor(d: f64) -> f64 {
    pow(d * sqrt(PI), 1.5) / (PI * PI)
}

fn radial_spec(d: f64, spec: &QuadratureSpec) -> QuadratureSpec {
    spec.with_tail_cutoff(envelope_cutoff(d))
}

/// `int_0^kmax sinc(kr) k^2 g(k) dk`, Gaussian-truncated.
fn sinc_transform(g: impl Fn(f64) -> f64, d: f64, r: f64, spec: &QuadratureSpec) -> Result<f64> {
    let r = fabs(r);
    let k_max = envelope_cutoff(d);
    let spec = radial_spec(d, spec);
    Ok(integrate_oscillatory(|k: f64| k * k * sinc(k * r) * g(k), r, k_max, &spec)?.value)
}

/// `int_0^kmax j1(kr) k^3 g(k) dk`, the radial part of `-d/dr` of the
/// [`sinc_transform`].
fn j1_transform(g: impl Fn(f64) -> f64, d: f64, r: f64, spec: &QuadratureSpec) -> Result<f64> {
    let r = fabs(r);
    let k_max = envelope_cutoff(d);
    let spec = radial_spec(d, spec);
    Ok(integrate_oscillatory(|k: f64| k * k * k * spherical_j1(k * r) * g(k), r, k_max, &spec)?.value)
}

fn energy(k: f64) -> f64 {
    sqrt(1.0 + k * k)
}

fn fw_norm(k: f64) -> f64 {
    let e = energy(k);
    sqrt(2.0 * e * (e + 1.0))
}

fn gauss(d: f64) -> impl Fn(f64) -> f64 {
    move |k| exp(-0.5 * k * k * d * d)
}

/// `T0(r)` from the radial sinc integral.
pub fn t0(packet: &PacketSpec, r: f64, spec: &QuadratureSpec) -> Result<f64> {
    let d = packet.width()?;
    let g = gauss(d);
    let integral = sinc_transform(|k| g(k) / energy(k), d, r, spec)?;
    Ok(gaussian_prefactor(d) * FRAC_1_SQRT_2 * integral)
}

/// `T0(r)` from the proper-time form: writing `1/E = pi^{-1/2} int exp(-eta^2 E^2) d eta`
/// leaves a Gaussian `k` integral that is done exactly, so
///
/// `T0 = pref int_{-6}^{6} exp(-eta^2) exp(-r^2 / (2 d^2 + 4 eta^2)) / (4 (d^2/2 + eta^2)^{3/2}) d eta`.
pub fn t0_eta(packet: &PacketSpec, r: f64, spec: &QuadratureSpec) -> Result<f64> {
    let d = packet.width()?;
    let a0 = 0.5 * d * d;
    let integrand = |eta: f64| {
        let a = a0 + eta * eta;
        exp(-eta * eta - r * r / (4.0 * a)) / (4.0 * a * sqrt(a))
    };
    let breaks = geometric_breaks(d.min(1.0) / 8.0, ETA_MAX);
    let half = integrate_adaptive_with_breaks(integrand, &breaks, spec)?.value;
    Ok(gaussian_prefactor(d) * FRAC_1_SQRT_2 * 2.0 * half)
}

/// `[0, s, 2s, 4s, ..., upper]`.
fn geometric_breaks(start: f64, upper: f64) -> Vec<f64> {
    let mut breaks = Vec::with_capacity(32);
    breaks.push(0.0);
    let mut edge = start;
    while edge < upper {
        breaks.push(edge);
        edge *= 2.0;
    }
    breaks.push(upper);
    breaks
}

/// Wide-packet limit of `T0`: half the initial Gaussian.
pub fn t0_large_d_limit(d: f64, r: f64) -> f64 {
    exp(-r * r / (2.0 * d * d)) / (2.0 * pow(PI, 0.75) * pow(d, 1.5))
}

/// Narrow-packet limit of `T0`: `d^{3/2} K1(r) / (sqrt 2 pi^{5/4} r)`.
pub fn t0_small_d_limit(d: f64, r: f64) -> f64 {
    pow(d, 1.5) * bessel_k1(r) / (SQRT_2 * pow(PI, 1.25) * r)
}

/// `Tz = -i dT0/dz` at the point `(0, 0, z)`; purely imaginary and odd in `z`.
pub fn tz(packet: &PacketSpec, z: f64, spec: &QuadratureSpec) -> Result<Complex64> {
    let d = packet.width()?;
    if z == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let g = gauss(d);
    let integral = j1_transform(|k| g(k) / energy(k), d, z, spec)?;
    Ok(I * (z.signum() * gaussian_prefactor(d) * FRAC_1_SQRT_2 * integral))
}

/// `S0(r)`, the upper entry of the FW-transformed Gaussian.
pub fn s0(packet: &PacketSpec, r: f64, spec: &QuadratureSpec) -> Result<f64> {
    let d = packet.width()?;
    let g = gauss(d);
    let integral = sinc_transform(|k| g(k) * sqrt(1.0 + 1.0 / energy(k)), d, r, spec)?;
    Ok(gaussian_prefactor(d) * integral)
}

/// `S_aux(r) = FT[f_p / N_p]`.
pub fn s_aux(packet: &PacketSpec, r: f64, spec: &QuadratureSpec) -> Result<f64> {
    let d = packet.width()?;
    let g = gauss(d);
    let integral = sinc_transform(|k| g(k) / fw_norm(k), d, r, spec)?;
    Ok(SQRT_2 * gaussian_prefactor(d) * integral)
}

/// `dS_aux/dz` at `(0, 0, z)`, differentiated under the integral sign.
pub fn s_aux_dz(packet: &PacketSpec, z: f64, spec: &QuadratureSpec) -> Result<f64> {
    let d = packet.width()?;
    if z == 0.0 {
        return Ok(0.0);
    }
    let g = gauss(d);
    let integral = j1_transform(|k| g(k) / fw_norm(k), d, z, spec)?;
    Ok(-z.signum() * SQRT_2 * gaussian_prefactor(d) * integral)
}

/// `Sz = FT[p_z f_p / N_p] = -i dS_aux/dz` on the z axis.
pub fn sz(packet: &PacketSpec, z: f64, spec: &QuadratureSpec) -> Result<Complex64> {
    Ok(-I * s_aux_dz(packet, z, spec)?)
}

// ---------------------------------------------------------------------------
// Point-like input
// ---------------------------------------------------------------------------

fn require_positive(function: &'static str, r: f64) -> Result<()> {
    if r > 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain { function, x: r })
    }
}

/// `D0(r) = K1(r) / (4 pi^2 r)`.
pub fn d0(r: f64) -> Result<f64> {
    require_positive("d0", r)?;
    Ok(bessel_k1(r) / (4.0 * PI * PI * r))
}

/// `D0` by quadrature of `pi^{-1/2} int_0^inf exp(-eta^2 - r^2/4 eta^2) / (8 pi^{3/2} eta^3) d eta`.
pub fn d0_eta(r: f64, spec: &QuadratureSpec) -> Result<f64> {
    require_positive("d0_eta", r)?;
    let integrand = |eta: f64| {
        if eta == 0.0 {
            return 0.0;
        }
        exp(-eta * eta - r * r / (4.0 * eta * eta)) / (eta * eta * eta)
    };
    let breaks = geometric_breaks(r.min(1.0) / 16.0, ETA_MAX + 0.5 * r);
    let q = integrate_adaptive_with_breaks(integrand, &breaks, spec)?;
    Ok(q.value / (8.0 * PI * PI))
}

/// `D_j(r) = i r_j K2(r) / (4 pi^2 r^2)` for `r != 0`.
pub fn d_vector(position: [f64; 3]) -> Result<[Complex64; 3]> {
    let r = sqrt(position.iter().map(|x| x * x).sum());
    require_positive("d_vector", r)?;
    let radial = bessel_k(2, r)? / (4.0 * PI * PI * r * r);
    Ok(position.map(|x| I * (x * radial)))
}

/// Regular part of `D_z` on the z axis by quadrature:
/// `i z / (16 pi^2) int_0^inf eta^-5 exp(-eta^2 - z^2/4 eta^2) d eta`.
pub fn dz_regular(z: f64, spec: &QuadratureSpec) -> Result<Complex64> {
    let r = fabs(z);
    require_positive("dz_regular", r)?;
    let integrand = |eta: f64| {
        if eta == 0.0 {
            return 0.0;
        }
        let e2 = eta * eta;
        exp(-e2 - r * r / (4.0 * e2)) / (e2 * e2 * eta)
    };
    let breaks = geometric_breaks(r.min(1.0) / 16.0, ETA_MAX + 0.5 * r);
    let q = integrate_adaptive_with_breaks(integrand, &breaks, spec)?;
    Ok(I * (z * q.value / (16.0 * PI * PI)))
}

/// `(i / 2 pi) delta(rho) / z`: the part of `D_z` concentrated on the axis.
pub const DZ_LINE_TERM: SingularTerm = SingularTerm::AxialLine {
    coefficient: Complex64::new(0.0, 0.5 / PI),
};

/// `delta(r) / sqrt 2` in the FW image of a point.
pub const B0_POINT_TERM: SingularTerm = SingularTerm::Point {
    coefficient: Complex64::new(FRAC_1_SQRT_2, 0.0),
};

/// `G(k) = 1 / (1 + sqrt(1 + 1/E_k))`, so that `sqrt(1 + 1/E) = 1 + G / E`.
pub fn b0_g(k: f64) -> f64 {
    1.0 / (1.0 + sqrt(1.0 + 1.0 / energy(k)))
}

/// `sqrt(1 + u) - 1` minus its Taylor polynomial through `u^4`.
fn b0_remainder(u: f64) -> f64 {
    if u < 0.05 {
        // Binomial coefficients of sqrt(1 + u) from u^5 on.
        const C: [f64; 7] = [
            7.0 / 256.0,
            -21.0 / 1024.0,
            33.0 / 2048.0,
            -429.0 / 32768.0,
            715.0 / 65536.0,
            -2431.0 / 262144.0,
            4199.0 / 524288.0,
        ];
        let u5 = u * u * u * u * u;
        return u5 * C.iter().rev().fold(0.0, |acc, &c| acc * u + c);
    }
    let gu = u / (1.0 + sqrt(1.0 + u));
    gu - u * (0.5 - u * (0.125 - u * (1.0 / 16.0 - u * 5.0 / 128.0)))
}

/// Regular part of `B0`, i.e. `FT[G(k)/E_k] / sqrt 2` with the exact `G`.
///
/// The first four powers of `u = 1/E` have closed-form transforms
/// (`K1(r)/2 pi^2 r`, `e^-r/4 pi r`, `K0(r)/2 pi^2`, `e^-r/8 pi`); only the
/// `O(u^5)` remainder is integrated numerically.
pub fn b0_regular(r: f64, spec: &QuadratureSpec) -> Result<f64> {
    require_positive("b0_regular", r)?;
    let pi2 = PI * PI;
    let er = exp(-r);
    let series = bessel_k1(r) / (4.0 * pi2 * r) - er / (32.0 * PI * r) + bessel_k0(r) / (32.0 * pi2)
        - 5.0 * er / (1024.0 * PI);
    let rest = integrate_oscillatory(
        |k: f64| k * libm::sin(k * r) * b0_remainder(1.0 / energy(k)),
        r,
        B0_K_MAX,
        spec,
    )?
    .value
        / (2.0 * pi2 * r);
    Ok(FRAC_1_SQRT_2 * (series + rest))
}

/// Regular part of `B0` with `G(k)` replaced by the constant `c0`:
/// `c0 K1(r) / (2 sqrt 2 pi^2 r)`.
pub fn b0_approx(r: f64, c0: f64) -> Result<f64> {
    require_positive("b0_approx", r)?;
    check_c0(c0)?;
    Ok(c0 * bessel_k1(r) / (2.0 * SQRT_2 * PI * PI * r))
}

pub fn check_c0(c0: f64) -> Result<()> {
    if (C0_RANGE.0..=C0_RANGE.1).contains(&c0) {
        Ok(())
    } else {
        Err(Error::InvalidInput("c0 must lie in [0.40, 0.52]"))
    }
}

/// MO image of `delta(r) e_1` (after the `V` step): a point term with
/// coefficients `(1, 0, -i, 0)/2` plus a regular spinor field.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TransformedDeltaMo {
    pub delta_coefficients: FourSpinor,
}

pub fn transformed_delta_mo() -> TransformedDeltaMo {
    TransformedDeltaMo {
        delta_coefficients: FourSpinor::new([
            Complex64::new(0.5, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, -0.5),
            Complex64::new(0.0, 0.0),
        ]),
    }
}

impl TransformedDeltaMo {
    /// `(D0 + i Dz, i Dx - Dy, i D0 + Dz, Dx + i Dy)` at `position != 0`.
    ///
    /// On the z axis this is the regular part only; the line term
    /// [`DZ_LINE_TERM`] is not included.
    pub fn regular(&self, position: [f64; 3]) -> Result<FourSpinor> {
        let r = sqrt(position.iter().map(|x| x * x).sum());
        let d0 = Complex64::new(d0(r)?, 0.0);
        let [dx, dy, dz] = d_vector(position)?;
        Ok(FourSpinor::new([d0 + I * dz, I * dx - dy, I * d0 + dz, dx + I * dy]))
    }
}

// ---------------------------------------------------------------------------
// Profile builders
// ---------------------------------------------------------------------------

fn build<F>(
    which: ProfileKind,
    packet: PacketSpec,
    grid: &[f64],
    singular: Option<SingularTerm>,
    mut eval: F,
) -> Result<ProfileCurve>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    check_grid(grid)?;
    let values = grid.iter().map(|&x| eval(x)).collect::<Result<Vec<_>>>()?;
    ProfileCurve::new(which, grid.to_vec(), values, packet, singular)
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

pub fn t0_profile(packet: &PacketSpec, r_grid: &[f64], spec: &QuadratureSpec) -> Result<ProfileCurve> {
    build(ProfileKind::T0, *packet, r_grid, None, |r| t0(packet, r, spec).map(real))
}

pub fn tz_profile(packet: &PacketSpec, z_grid: &[f64], spec: &QuadratureSpec) -> Result<ProfileCurve> {
    build(ProfileKind::Tz, *packet, z_grid, None, |z| tz(packet, z, spec))
}

pub fn s0_profile(packet: &PacketSpec, r_grid: &[f64], spec: &QuadratureSpec) -> Result<ProfileCurve> {
    build(ProfileKind::S0, *packet, r_grid, None, |r| s0(packet, r, spec).map(real))
}

pub fn sz_profile(packet: &PacketSpec, z_grid: &[f64], spec: &QuadratureSpec) -> Result<ProfileCurve> {
    build(ProfileKind::Sz, *packet, z_grid, None, |z| sz(packet, z, spec))
}

pub fn d0_profile(r_grid: &[f64]) -> Result<ProfileCurve> {
    build(ProfileKind::D0, PacketSpec::delta(), r_grid, None, |r| d0(r).map(real))
}

/// Regular part of `D_z` along the z axis; the axial line term is attached
/// as [`DZ_LINE_TERM`].
pub fn dz_regular_profile(z_grid: &[f64], spec: &QuadratureSpec) -> Result<ProfileCurve> {
    build(ProfileKind::DzRegular, PacketSpec::delta(), z_grid, Some(DZ_LINE_TERM), |z| {
        dz_regular(z, spec)
    })
}

/// Exact regular part of `B0` and its constant-`C0` approximation.
#[derive(Clone, Debug, PartialEq)]
pub struct B0Profile {
    pub c0: f64,
    pub exact: ProfileCurve,
    pub approximation: Vec<f64>,
}

pub fn b0_profile(r_grid: &[f64], c0: f64, spec: &QuadratureSpec) -> Result<B0Profile> {
    check_c0(c0)?;
    let exact = build(ProfileKind::B0Regular, PacketSpec::delta(), r_grid, Some(B0_POINT_TERM), |r| {
        b0_regular(r, spec).map(real)
    })?;
    let approximation = r_grid.iter().map(|&r| b0_approx(r, c0)).collect::<Result<Vec<_>>>()?;
    Ok(B0Profile {
        c0,
        exact,
        approximation,
    })
}
