use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};

use dirac_nonlocality::dirac::{dirac_matrices, u_mo_composed};
use dirac_nonlocality::fd::first_derivative;
use dirac_nonlocality::quadrature::{integrate_adaptive, QuadratureSpec};
use dirac_nonlocality::special::{bessel_k, bessel_k1};
use dirac_nonlocality::transform::*;
use dirac_nonlocality::{Complex64, FourSpinor, Matrix4C, Momentum3};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn spec() -> QuadratureSpec {
    QuadratureSpec::default()
}

fn gaussian(d: f64) -> PacketSpec {
    PacketSpec::gaussian(d).unwrap()
}

#[test]
fn moments_match_closed_forms() {
    for kind in TransformKind::ALL {
        for order in [0, 2] {
            let m = moment(kind, order).unwrap();
            let tol = if order == 0 { 1e-8 } else { 1e-6 };
            assert!(m.max_deviation <= tol, "{kind:?} order {order}: {}", m.max_deviation);
        }
    }
    let fw2 = moment(TransformKind::Fw, 2).unwrap();
    assert!(fw2.matrix.max_abs_diff(&(Matrix4C::identity() * 0.75)) <= 1e-6);
}

#[test]
fn mo_moment_entries() {
    // One-based (3,1) carries +i/sqrt 2 (zeroth) and +3i/sqrt 2 (second).
    let m0 = moment(TransformKind::Mo, 0).unwrap().matrix;
    assert!((m0[(2, 0)] - c(0.0, FRAC_1_SQRT_2)).norm() <= 1e-8);
    assert!((m0[(0, 2)] - c(0.0, -FRAC_1_SQRT_2)).norm() <= 1e-8);
    let m2 = moment(TransformKind::Mo, 2).unwrap().matrix;
    assert!((m2[(2, 0)] - c(0.0, 3.0 * FRAC_1_SQRT_2)).norm() <= 1e-6);
    let delta = dirac_matrices().delta;
    assert!(m2.max_abs_diff(&(delta * (3.0 * FRAC_1_SQRT_2))) <= 1e-6);
}

#[test]
fn d0_closed_form_against_quadrature() {
    let closed = d0(1.0).unwrap();
    let quad = d0_eta(1.0, &spec()).unwrap();
    assert!((closed - quad).abs() <= 1e-8);
    for r in [0.05, 0.4, 3.0, 9.0] {
        assert!((d0(r).unwrap() / d0_eta(r, &spec()).unwrap() - 1.0).abs() < 1e-8, "r {r}");
    }
}

#[test]
fn d0_decay_and_singularity() {
    let ratio = d0(5.0).unwrap() / d0(4.0).unwrap();
    let asymptotic = (-1.0f64).exp() * (0.8f64).powf(1.5);
    assert!((ratio / asymptotic - 1.0).abs() < 0.05);
    // D0 ~ 1/(4 pi^2 r^2) near the origin.
    let r = 1e-4;
    assert!((d0(r).unwrap() * 4.0 * PI * PI * r * r - 1.0).abs() < 1e-6);
    assert!(d0(0.0).is_err());
    let curve = d0_profile(&[0.1, 0.2, 0.4]).unwrap();
    assert_eq!(curve.which, ProfileKind::D0);
    assert!(d0_profile(&[0.2, 0.1]).is_err());
}

#[test]
fn dz_regular_part() {
    let s = spec();
    let a2 = dz_regular(2.0, &s).unwrap();
    let a4 = dz_regular(4.0, &s).unwrap();
    assert!((a4 / a2).norm() <= (-2.0f64).exp() * 1.5);
    assert_eq!(dz_regular(-1.3, &s).unwrap(), -dz_regular(1.3, &s).unwrap());

    let loose = dz_regular(1.0, &QuadratureSpec::with_tolerances(1e-8, 1e-8)).unwrap();
    let tight = dz_regular(1.0, &QuadratureSpec::with_tolerances(1e-10, 1e-10)).unwrap();
    assert!((loose - tight).norm() <= 1e-7);

    // Closed form i z K2(|z|) / (4 pi^2 z^2).
    for z in [0.1, 1.0, 2.5, 6.0] {
        let closed = d_vector([0.0, 0.0, z]).unwrap()[2];
        let expected = c(0.0, bessel_k(2, z).unwrap() / (4.0 * PI * PI * z));
        assert!((closed / expected - 1.0).norm() < 1e-14);
        assert!((dz_regular(z, &s).unwrap() / closed - 1.0).norm() < 1e-8, "z {z}");
    }

    let curve = dz_regular_profile(&[-2.0, -1.0, 1.0, 2.0], &s).unwrap();
    assert_eq!(curve.singular, Some(DZ_LINE_TERM));
    assert!(curve.values.iter().all(|v| v.re == 0.0));
}

#[test]
fn g_function_limits() {
    assert!((b0_g(0.0) - 1.0 / (SQRT_2 + 1.0)).abs() < 1e-15);
    assert!((b0_g(1e8) - 0.5).abs() < 1e-8);
    // sqrt(1 + 1/E) = 1 + G / E
    let k: f64 = 0.8;
    let e = (1.0 + k * k).sqrt();
    assert!(((1.0 + 1.0 / e).sqrt() - 1.0 - b0_g(k) / e).abs() < 1e-15);
}

/// `(1/2 pi^2 r) int_0^inf k sin(kr) [sqrt(1 + 1/E) - 1 - 1/2E] dk / sqrt 2`
/// plus the closed-form transform of `1/2E`, summed over half periods with
/// repeated averaging of the alternating partial sums.
fn b0_oracle(r: f64) -> f64 {
    let s = QuadratureSpec::with_tolerances(1e-13, 1e-10);
    let f = |k: f64| {
        let u = 1.0 / (1.0 + k * k).sqrt();
        k * (k * r).sin() * ((1.0 + u).sqrt() - 1.0 - 0.5 * u)
    };
    let half = PI / r;
    let mut sum = 0.0;
    let mut partial = Vec::new();
    for n in 0..400 {
        let lo = n as f64 * half;
        sum += integrate_adaptive(f, lo, lo + half, &s).unwrap().value;
        if n >= 360 {
            partial.push(sum);
        }
    }
    while partial.len() > 1 {
        partial = partial.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    }
    FRAC_1_SQRT_2 * (bessel_k1(r) / (4.0 * PI * PI * r) + partial[0] / (2.0 * PI * PI * r))
}

#[test]
fn b0_regular_against_oracle() {
    for r in [0.5, 1.0, 2.0] {
        let got = b0_regular(r, &spec()).unwrap();
        let oracle = b0_oracle(r);
        assert!((got - oracle).abs() < 1e-8, "r {r}: {got} vs {oracle}");
    }
    assert!((b0_regular(1.0, &spec()).unwrap() - 0.008_860_71).abs() < 1e-8);
}

#[test]
fn b0_constant_approximation() {
    let r = 1.0;
    let exact = b0_regular(r, &spec()).unwrap();
    let approx = b0_approx(r, DEFAULT_C0).unwrap();
    let deviation = (approx - exact) / exact;
    // The constant-G curve overshoots by about 11% at one Compton wavelength.
    assert!((deviation - 0.1121).abs() < 5e-4, "{deviation}");
    assert!(b0_approx(r, 0.3).is_err());

    let profile = b0_profile(&[0.5, 1.0, 2.0], DEFAULT_C0, &spec()).unwrap();
    assert_eq!(profile.exact.singular, Some(B0_POINT_TERM));
    assert_eq!(profile.approximation.len(), 3);
    assert!(b0_profile(&[1.0], 0.6, &spec()).is_err());
}

#[test]
fn t0_wide_packet_limit() {
    // The wide-packet Gaussian form misses a relative correction of about
    // -3/(2 d^2) at the centre; at d = 10 that is -1.45%.
    let p = gaussian(10.0);
    let centre = t0(&p, 0.0, &spec()).unwrap() / t0_large_d_limit(10.0, 0.0) - 1.0;
    assert!((centre + 0.01447).abs() < 1e-4, "{centre}");
    let at_d = t0(&p, 10.0, &spec()).unwrap() / t0_large_d_limit(10.0, 10.0) - 1.0;
    assert!(at_d.abs() < 0.01, "{at_d}");
    // The correction shrinks like 1/d^2.
    let p40 = gaussian(40.0);
    let wider = t0(&p40, 0.0, &spec()).unwrap() / t0_large_d_limit(40.0, 0.0) - 1.0;
    assert!(wider.abs() < 0.001, "{wider}");
}

#[test]
fn t0_narrow_packet_limit() {
    let p = gaussian(0.05);
    for r in [0.5, 1.0, 2.0] {
        let rel = t0(&p, r, &spec()).unwrap() / t0_small_d_limit(0.05, r) - 1.0;
        assert!(rel.abs() < 0.03, "r {r}: {rel}");
    }
}

#[test]
fn t0_dual_representations() {
    for d in [0.2, 1.0, 5.0] {
        let p = gaussian(d);
        for r in [0.1, 0.5, 1.0, 3.0] {
            let a = t0(&p, r, &spec()).unwrap();
            let b = t0_eta(&p, r, &spec()).unwrap();
            assert!((a - b).abs() <= 1e-8, "d {d} r {r}: {a} vs {b}");
        }
    }
    assert_eq!(t0(&gaussian(1.0), -0.7, &spec()).unwrap(), t0(&gaussian(1.0), 0.7, &spec()).unwrap());
}

#[test]
fn tz_is_derivative_of_t0() {
    let p = gaussian(1.0);
    let s = spec();
    assert_eq!(tz(&p, 0.0, &s).unwrap(), c(0.0, 0.0));
    for z in [0.3, 1.0, 2.5] {
        let direct = tz(&p, z, &s).unwrap();
        assert_eq!(direct.re, 0.0);
        assert_eq!(tz(&p, -z, &s).unwrap(), -direct);
        let dt0 = first_derivative(|x: f64| t0(&p, x, &s).unwrap(), z, 1e-2);
        let fd = c(0.0, -dt0);
        assert!((direct - fd).norm() <= 1e-6, "z {z}: {direct} vs {fd}");
    }
}

#[test]
fn s0_properties() {
    let s = spec();
    let wide = gaussian(10.0);
    let ratio = s0(&wide, 0.0, &s).unwrap() / wide.position_amplitude(0.0).unwrap();
    assert!((ratio - 1.0).abs() < 0.01, "{ratio}");

    let unit = gaussian(1.0);
    let f = unit.position_amplitude(1.0).unwrap();
    let s0_1 = s0(&unit, 1.0, &s).unwrap();
    let t0_1 = t0(&unit, 1.0, &s).unwrap();
    assert!((s0_1 - f).abs() < (2.0 * t0_1 - f).abs());

    let curve = s0_profile(&unit, &[0.0, 0.5, 1.0], &s).unwrap();
    assert!(curve.values.iter().all(|v| v.im == 0.0));
}

#[test]
fn sz_is_derivative_of_s_aux() {
    let p = gaussian(1.0);
    let s = spec();
    assert_eq!(sz(&p, 0.0, &s).unwrap(), c(0.0, 0.0));
    let inside = s_aux_dz(&p, 1.0, &s).unwrap();
    let outside = first_derivative(|z: f64| s_aux(&p, z, &s).unwrap(), 1.0, 1e-2);
    assert!((inside - outside).abs() <= 1e-6, "{inside} vs {outside}");
    assert_eq!(sz(&p, -0.8, &s).unwrap(), -sz(&p, 0.8, &s).unwrap());
}

#[test]
fn sz_is_small_for_wide_packets() {
    let p = gaussian(10.0);
    let s = spec();
    let grid = uniform_grid(0.0, 30.0, 61).unwrap();
    let max_sz = sz_profile(&p, &grid, &s).unwrap().values.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let max_s0 = s0_profile(&p, &grid, &s).unwrap().values.iter().map(|v| v.norm()).fold(0.0, f64::max);
    assert!(max_sz / max_s0 < 0.1, "{max_sz} / {max_s0}");
}

#[test]
fn mo_delta_image() {
    let image = transformed_delta_mo();
    let expected = FourSpinor::new([c(0.5, 0.0), c(0.0, 0.0), c(0.0, -0.5), c(0.0, 0.0)]);
    assert_eq!(image.delta_coefficients, expected);

    // Third entry on the axis is i D0 + Dz.
    let z = 1.2;
    let spinor = image.regular([0.0, 0.0, z]).unwrap();
    let want = c(0.0, d0(z).unwrap()) + d_vector([0.0, 0.0, z]).unwrap()[2];
    assert!((spinor.0[2] - want).norm() < 1e-15);
    // On the axis the regular Dz is the quadrature value too.
    assert!((d_vector([0.0, 0.0, z]).unwrap()[2] - dz_regular(z, &spec()).unwrap()).norm() < 1e-9);

    // D_x on the x axis equals D_z on the z axis.
    let x = 0.9;
    assert_eq!(d_vector([x, 0.0, 0.0]).unwrap()[0], d_vector([0.0, 0.0, x]).unwrap()[2]);
    assert!(image.regular([0.0, 0.0, 0.0]).is_err());
}

#[test]
fn mo_delta_symbol_matches_operators() {
    // In momentum space the regular column is (1 + i p_z, i p+, i + p_z, p+) / (2E),
    // which is what the D0 = FT[1/2E], D_j = FT[p_j/2E] assembly encodes.
    let local = transformed_delta_mo().delta_coefficients;
    for p in [Momentum3::new(0.3, -0.2, 0.9), Momentum3::new(-2.0, 1.0, 0.1)] {
        let e = p.energy();
        let full = u_mo_composed(&p).apply(&FourSpinor::unit(0));
        let pp = p.p_plus();
        let regular = FourSpinor::new([
            c(1.0, p.z),
            c(0.0, 1.0) * pp,
            c(p.z, 1.0),
            pp,
        ]) * (0.5 / e);
        assert!((full - local - regular).0.iter().all(|x| x.norm() < 1e-15));
    }
}

#[test]
fn profile_curve_invariants() {
    let p = gaussian(1.0);
    let curve = t0_profile(&p, &[0.0, 1.0, 2.0], &spec()).unwrap();
    assert_eq!(curve.len(), 3);
    assert!(t0_profile(&p, &[0.0, 0.0], &spec()).is_err());
    assert!(tz_profile(&PacketSpec::delta(), &[1.0], &spec()).is_err());
    assert!(ProfileCurve::new(ProfileKind::T0, vec![0.0], vec![c(f64::NAN, 0.0)], p, None).is_err());
}
