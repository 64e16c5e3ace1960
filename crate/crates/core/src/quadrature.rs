//! One-dimensional integration engines.
//!
//! [`integrate_adaptive`] is a globally adaptive Gauss-Kronrod (7/15) scheme
//! with interval bisection. [`integrate_semi_infinite`] either truncates at
//! the configured cutoff or maps `[a, inf)` onto `[0, 1)`.
//! [`integrate_oscillatory_sin`] handles the radial integrals left over
//! after the angular part of a 3D Fourier transform has been done
//! analytically: once the integrand completes more than a few oscillations
//! it is summed panel by panel, one half-period at a time.

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Sub};

use libm::{fabs, sin};
use num_complex::Complex64;

use crate::{Error, Result};

/// Oscillation count (`r * k_max`) above which the oscillatory engine
/// switches to half-period panels.
pub const PANEL_SWITCH: f64 = 20.0;

const MAX_EVALUATIONS: usize = 4_000_000;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Gauss weights for the nodes `XGK[1], XGK[3], XGK[5], XGK[7]`.
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Values the engines can integrate: reals and complex numbers.
pub trait QuadValue: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {
    const ZERO: Self;
    fn magnitude(&self) -> f64;
    fn to_complex(self) -> Complex64;
}

impl QuadValue for f64 {
    const ZERO: f64 = 0.0;
    fn magnitude(&self) -> f64 {
        fabs(*self)
    }
    fn to_complex(self) -> Complex64 {
        Complex64::new(self, 0.0)
    }
}

impl QuadValue for Complex64 {
    const ZERO: Complex64 = Complex64::new(0.0, 0.0);
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn to_complex(self) -> Complex64 {
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Maximum number of bisections of any one subinterval.
    pub max_depth: u32,
    /// Truncation point for semi-infinite and oscillatory integrals.
    pub tail_cutoff: Option<f64>,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            abs_tol: 1e-10,
            rel_tol: 1e-9,
            max_depth: 40,
            tail_cutoff: None,
        }
    }
}

impl QuadratureSpec {
    pub fn with_tolerances(abs_tol: f64, rel_tol: f64) -> Self {
        QuadratureSpec {
            abs_tol,
            rel_tol,
            ..Default::default()
        }
    }

    pub fn with_tail_cutoff(self, cutoff: f64) -> Self {
        QuadratureSpec {
            tail_cutoff: Some(cutoff),
            ..self
        }
    }

    pub fn with_max_depth(self, max_depth: u32) -> Self {
        QuadratureSpec { max_depth, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.rel_tol > 0.0) {
            return Err(Error::InvalidInput("quadrature tolerances must be positive"));
        }
        if self.max_depth < 1 {
            return Err(Error::InvalidInput("max_depth must be at least 1"));
        }
        if let Some(c) = self.tail_cutoff {
            if !(c.is_finite() && c > 0.0) {
                return Err(Error::InvalidInput("tail cutoff must be positive and finite"));
            }
        }
        Ok(())
    }

    fn tolerance_for(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureResult<T> {
    pub value: T,
    pub error_estimate: f64,
    pub evaluations: usize,
}

impl<T: QuadValue> QuadratureResult<T> {
    fn zero() -> Self {
        QuadratureResult {
            value: T::ZERO,
            error_estimate: 0.0,
            evaluations: 0,
        }
    }

    fn accumulate(&mut self, other: QuadratureResult<T>) {
        self.value = self.value + other.value;
        self.error_estimate += other.error_estimate;
        self.evaluations += other.evaluations;
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> QuadratureResult<U> {
        QuadratureResult {
            value: f(self.value),
            error_estimate: self.error_estimate,
            evaluations: self.evaluations,
        }
    }
}

struct Segment<T> {
    a: f64,
    b: f64,
    value: T,
    error: f64,
    /// Error is at the round-off floor; bisecting further cannot help.
    roundoff: bool,
    depth: u32,
}

impl<T> PartialEq for Segment<T> {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}

impl<T> Eq for Segment<T> {}

impl<T> PartialOrd for Segment<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T> Ord for Segment<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gauss_kronrod<T: QuadValue, F: FnMut(f64) -> T>(f: &mut F, a: f64, b: f64, depth: u32) -> Segment<T> {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut resabs = fc.magnitude() * WGK[7];
    for (j, (&x, &w)) in XGK.iter().zip(WGK.iter()).take(7).enumerate() {
        let dx = half * x;
        let f1 = f(centre - dx);
        let f2 = f(centre + dx);
        kronrod = kronrod + (f1 + f2) * w;
        resabs += (f1.magnitude() + f2.magnitude()) * w;
        if j % 2 == 1 {
            gauss = gauss + (f1 + f2) * WG[j / 2];
        }
    }
    let value = kronrod * half;
    let raw = (kronrod - gauss).magnitude() * fabs(half);
    let floor = 50.0 * f64::EPSILON * resabs * fabs(half);
    Segment {
        a,
        b,
        value,
        error: raw.max(floor),
        roundoff: raw <= floor,
        depth,
    }
}

/// Integrates `f` over the finite interval `[a, b]`.
///
/// Converges when the summed Kronrod-minus-Gauss error estimate drops
/// below `max(abs_tol, rel_tol * |value|)`. Subintervals whose estimate has
/// reached the floating-point round-off floor are accepted as they are.
pub fn integrate_adaptive<T, F>(f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<QuadratureResult<T>>
where
    T: QuadValue,
    F: FnMut(f64) -> T,
{
    integrate_adaptive_with_breaks(f, &[a, b], spec)
}

/// Like [`integrate_adaptive`], but seeded with the subintervals between
/// consecutive `breaks`. Use it when the integrand has structure (a narrow
/// peak, a kink) that a single 15-point rule over the whole range could miss.
pub fn integrate_adaptive_with_breaks<T, F>(mut f: F, breaks: &[f64], spec: &QuadratureSpec) -> Result<QuadratureResult<T>>
where
    T: QuadValue,
    F: FnMut(f64) -> T,
{
    spec.validate()?;
    let ordered = breaks.windows(2).all(|w| w[0] < w[1]);
    if breaks.len() < 2 || !ordered || breaks.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidInput("integration bounds must be finite and increasing"));
    }

    let mut open: BinaryHeap<Segment<T>> = BinaryHeap::new();
    let mut settled: Vec<Segment<T>> = Vec::new();
    let mut depth_limited = false;
    let mut evaluations = 0;
    let mut total = T::ZERO;
    let mut total_error = 0.0;

    for w in breaks.windows(2) {
        let seg = gauss_kronrod(&mut f, w[0], w[1], 0);
        evaluations += 15;
        total = total + seg.value;
        total_error += seg.error;
        if seg.roundoff {
            settled.push(seg);
        } else {
            open.push(seg);
        }
    }

    while total_error > spec.tolerance_for(total.magnitude()) {
        let Some(worst) = open.pop() else { break };
        let mid = 0.5 * (worst.a + worst.b);
        let too_narrow = mid <= worst.a || mid >= worst.b;
        if worst.depth >= spec.max_depth || too_narrow {
            depth_limited = true;
            settled.push(worst);
            continue;
        }
        if evaluations >= MAX_EVALUATIONS {
            depth_limited = true;
            open.push(worst);
            break;
        }
        let left = gauss_kronrod(&mut f, worst.a, mid, worst.depth + 1);
        let right = gauss_kronrod(&mut f, mid, worst.b, worst.depth + 1);
        evaluations += 30;
        total = total + left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        for seg in [left, right] {
            if seg.roundoff {
                settled.push(seg);
            } else {
                open.push(seg);
            }
        }
    }

    // Re-sum from scratch to drop the drift of the running totals.
    let mut value = T::ZERO;
    let mut error_estimate = 0.0;
    for seg in open.iter().chain(settled.iter()) {
        value = value + seg.value;
        error_estimate += seg.error;
    }

    let result = QuadratureResult {
        value,
        error_estimate,
        evaluations,
    };
    if error_estimate <= spec.tolerance_for(value.magnitude()) {
        return Ok(result);
    }
    // Only round-off limited pieces remain: the tolerance was finer than
    // double precision permits for this integrand, which is not a failure.
    if !depth_limited && open.is_empty() {
        return Ok(result);
    }
    Err(Error::QuadratureFailure {
        best_estimate: value.to_complex(),
        error_estimate,
        evaluations,
    })
}

/// Integrates `f` over `[a, inf)`.
///
/// With `spec.tail_cutoff = Some(c)` the range is truncated to `[a, c]`,
/// which is the right choice for Gaussian-damped integrands. Otherwise the
/// substitution `t = a + s / (1 - s)` maps the range onto `[0, 1)`.
pub fn integrate_semi_infinite<T, F>(mut f: F, a: f64, spec: &QuadratureSpec) -> Result<QuadratureResult<T>>
where
    T: QuadValue,
    F: FnMut(f64) -> T,
{
    match spec.tail_cutoff {
        Some(c) if c > a => integrate_adaptive(f, a, c, spec),
        Some(_) => Err(Error::InvalidInput("tail cutoff must lie above the lower bound")),
        None => integrate_adaptive(
            |s: f64| {
                let w = 1.0 - s;
                f(a + s / w) * (1.0 / (w * w))
            },
            0.0,
            1.0,
            spec,
        ),
    }
}

/// Radial kernel left after the angular integration of `exp(i k.r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RadialKernel {
    /// `sin(kr)/(kr) * k^2`; the 3D Fourier transform of a radial function
    /// is `(1 / 2 pi^2)` times this integral.
    Sinc,
    /// `k sin(kr)`; equals `r` times the [`RadialKernel::Sinc`] integral.
    Sine,
}

/// `sin(x)/x`, with the removable singularity filled in.
pub fn sinc(x: f64) -> f64 {
    if fabs(x) < 1e-4 {
        let x2 = x * x;
        1.0 - x2 / 6.0 * (1.0 - x2 / 20.0)
    } else {
        sin(x) / x
    }
}

/// Spherical Bessel function `j_1(x) = sin(x)/x^2 - cos(x)/x`.
pub fn spherical_j1(x: f64) -> f64 {
    if fabs(x) < 0.1 {
        let x2 = x * x;
        // x/3 - x^3/30 + x^5/840 - x^7/45360
        x * (1.0 / 3.0 - x2 * (1.0 / 30.0 - x2 * (1.0 / 840.0 - x2 / 45_360.0)))
    } else {
        (sin(x) - x * libm::cos(x)) / (x * x)
    }
}

/// `int_0^inf kernel(k, r) g(k) dk`, truncated at `spec.tail_cutoff`.
///
/// At `r = 0` the sinc kernel reduces to `k^2` exactly.
pub fn integrate_oscillatory_sin<T, F>(
    mut g: F,
    r: f64,
    kernel: RadialKernel,
    spec: &QuadratureSpec,
) -> Result<QuadratureResult<T>>
where
    T: QuadValue,
    F: FnMut(f64) -> T,
{
    if !(r >= 0.0 && r.is_finite()) {
        return Err(Error::InvalidInput("radius must be finite and non-negative"));
    }
    let k_max = spec
        .tail_cutoff
        .ok_or(Error::InvalidInput("oscillatory quadrature needs a tail cutoff"))?;
    match kernel {
        RadialKernel::Sinc => integrate_oscillatory(move |k| g(k) * (k * k * sinc(k * r)), r, k_max, spec),
        RadialKernel::Sine => integrate_oscillatory(move |k| g(k) * (k * sin(k * r)), r, k_max, spec),
    }
}

/// `int_0^k_max h(k) dk` for an integrand oscillating with wavenumber `r`.
///
/// Below [`PANEL_SWITCH`] oscillations the whole range goes to
/// [`integrate_adaptive`]; above it each half-period `[n pi/r, (n+1) pi/r]`
/// is integrated separately with an equal share of the absolute tolerance.
pub fn integrate_oscillatory<T, F>(mut h: F, r: f64, k_max: f64, spec: &QuadratureSpec) -> Result<QuadratureResult<T>>
where
    T: QuadValue,
    F: FnMut(f64) -> T,
{
    spec.validate()?;
    if !(k_max > 0.0 && k_max.is_finite()) {
        return Err(Error::InvalidInput("upper cutoff must be positive and finite"));
    }
    if r * k_max <= PANEL_SWITCH {
        return integrate_adaptive(h, 0.0, k_max, spec);
    }
    let half_period = core::f64::consts::PI / r;
    let panels = libm::ceil(k_max / half_period) as usize;
    let panel_spec = QuadratureSpec {
        abs_tol: spec.abs_tol / panels as f64,
        ..*spec
    };
    let mut total: QuadratureResult<T> = QuadratureResult::zero();
    for n in 0..panels {
        let lo = n as f64 * half_period;
        let hi = (lo + half_period).min(k_max);
        if hi <= lo {
            break;
        }
        let piece = integrate_adaptive(&mut h, lo, hi, &panel_spec).map_err(|e| match e {
            Error::QuadratureFailure {
                best_estimate,
                error_estimate,
                evaluations,
            } => Error::QuadratureFailure {
                best_estimate: best_estimate + total.value.to_complex(),
                error_estimate: error_estimate + total.error_estimate,
                evaluations: evaluations + total.evaluations,
            },
            other => other,
        })?;
        total.accumulate(piece);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::{FRAC_PI_2, PI};
    use libm::{exp, sqrt};

    #[test]
    fn gaussian_half_line() {
        let spec = QuadratureSpec::default();
        let r = integrate_adaptive(|t: f64| exp(-t * t), 0.0, 40.0, &spec).unwrap();
        assert!((r.value - sqrt(PI) / 2.0).abs() < 1e-12);
        assert!(r.error_estimate >= 0.0);
    }

    #[test]
    fn lorentzian_needs_mapping() {
        let spec = QuadratureSpec::default();
        let r = integrate_semi_infinite(|t: f64| 1.0 / (1.0 + t * t), 0.0, &spec).unwrap();
        assert!((r.value - FRAC_PI_2).abs() < 1e-10, "{}", r.value);
    }

    #[test]
    fn gaussian_sine_identity() {
        // int_0^inf k sin(kr) exp(-k^2 p^2) dk = sqrt(pi) r / (4 p^3) exp(-r^2 / 4 p^2)
        let spec = QuadratureSpec::default().with_tail_cutoff(12.0);
        let r = integrate_oscillatory_sin(|k: f64| exp(-k * k), 1.0, RadialKernel::Sine, &spec).unwrap();
        assert!((r.value - sqrt(PI) / 4.0 * exp(-0.25)).abs() < 1e-10);
    }

    #[test]
    fn sinc_kernel_at_origin() {
        let spec = QuadratureSpec::default().with_tail_cutoff(12.0);
        let r = integrate_oscillatory_sin(|k: f64| exp(-k * k), 0.0, RadialKernel::Sinc, &spec).unwrap();
        // int k^2 exp(-k^2) = sqrt(pi)/4
        assert!((r.value - sqrt(PI) / 4.0).abs() < 1e-12);
    }

    #[test]
    fn panel_branch_matches_closed_form() {
        // r * k_max = 2 * 12 > PANEL_SWITCH, so this goes through the panels.
        let spec = QuadratureSpec::default().with_tail_cutoff(12.0);
        let r = 2.0;
        let got = integrate_oscillatory_sin(|k: f64| exp(-k * k), r, RadialKernel::Sine, &spec).unwrap();
        let expected = sqrt(PI) * r / 4.0 * exp(-r * r / 4.0);
        assert!((got.value - expected).abs() < 1e-10);
    }

    #[test]
    fn complex_values() {
        let spec = QuadratureSpec::default();
        let r = integrate_adaptive(|t: f64| Complex64::new(libm::cos(t), sin(t)), 0.0, PI, &spec).unwrap();
        assert!((r.value - Complex64::new(0.0, 2.0)).norm() < 1e-12);
    }

    #[test]
    fn depth_exhaustion_reports_best_estimate() {
        let spec = QuadratureSpec::with_tolerances(1e-14, 1e-14).with_max_depth(1);
        let err = integrate_adaptive(|t: f64| 1.0 / sqrt(t), 0.0, 1.0, &spec).unwrap_err();
        match err {
            Error::QuadratureFailure {
                best_estimate,
                error_estimate,
                evaluations,
            } => {
                assert!((best_estimate.re - 2.0).abs() < 0.5);
                assert!(error_estimate > 1e-14);
                assert_eq!(evaluations, 45);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn endpoint_singularity() {
        let spec = QuadratureSpec::default();
        let r = integrate_adaptive(libm::log, 0.0, 1.0, &spec).unwrap();
        assert!((r.value + 1.0).abs() < 1e-9, "{}", r.value);
    }

    #[test]
    fn breaks_catch_a_narrow_peak() {
        let spec = QuadratureSpec::default();
        let peak = |t: f64| exp(-2500.0 * t * t);
        let exact = sqrt(PI) / 100.0;
        let seeded = integrate_adaptive_with_breaks(peak, &[0.0, 0.1, 50.0], &spec).unwrap();
        assert!((seeded.value - exact).abs() < 1e-12);
        assert!(integrate_adaptive_with_breaks(peak, &[0.0, 1.0, 0.5], &spec).is_err());
    }

    #[test]
    fn rejects_bad_input() {
        let spec = QuadratureSpec::default();
        assert!(integrate_adaptive(|t: f64| t, 1.0, 0.0, &spec).is_err());
        let bad = QuadratureSpec::with_tolerances(0.0, 1e-9);
        assert!(integrate_adaptive(|t: f64| t, 0.0, 1.0, &bad).is_err());
        assert!(integrate_oscillatory_sin(|k: f64| k, 1.0, RadialKernel::Sine, &spec).is_err());
    }

    #[test]
    fn spherical_bessel_branches_agree() {
        for x in [0.099_999, 0.1, 0.100_001] {
            let direct = (sin(x) - x * libm::cos(x)) / (x * x);
            assert!((spherical_j1(x) - direct).abs() < 1e-13);
        }
        assert!((sinc(1e-4) - sin(1e-4) / 1e-4).abs() < 1e-16);
    }
}
