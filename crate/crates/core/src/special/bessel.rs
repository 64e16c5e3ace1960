//! MacDonald functions `K_n(x)` for integer order.
//!
//! `K_0` and `K_1` come from their power series for `x <= 2` and from
//! Steed's continued fraction (Temme's CF2) above, which yields
//! `exp(x) K_0` and `exp(x) K_1` directly. Higher orders use the forward
//! recurrence `K_{n+1} = K_{n-1} + (2n/x) K_n`; negative orders use
//! `K_{-n} = K_n`.

use libm::{exp, fabs, log, sqrt};

use crate::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082;
const SERIES_SWITCH: f64 = 2.0;
const MAX_TERMS: usize = 200;

fn k01_series(x: f64) -> (f64, f64) {
    let y = 0.25 * x * x;
    let log_half = log(0.5 * x);

    // K_0: sum y^k/(k!)^2 and sum H_k y^k/(k!)^2.
    let mut t0 = 1.0;
    let mut i0 = 1.0;
    let mut s0 = 0.0;
    // K_1: sum y^k/(k!(k+1)!) weighted by psi(k+1) + psi(k+2).
    let mut t1 = 1.0;
    let mut i1 = 1.0;
    let mut s1 = 1.0 - 2.0 * EULER_GAMMA;
    let mut harmonic = 0.0;
    for k in 1..MAX_TERMS {
        let kf = k as f64;
        harmonic += 1.0 / kf;
        t0 *= y / (kf * kf);
        t1 *= y / (kf * (kf + 1.0));
        i0 += t0;
        s0 += harmonic * t0;
        i1 += t1;
        s1 += (2.0 * (harmonic - EULER_GAMMA) + 1.0 / (kf + 1.0)) * t1;
        if t0 < 1e-17 * i0 && t1 < 1e-17 * i1 {
            break;
        }
    }
    let k0 = -(log_half + EULER_GAMMA) * i0 + s0;
    let k1 = 1.0 / x + 0.5 * x * i1 * log_half - 0.25 * x * s1;
    (k0, k1)
}

/// `(exp(x) K_0(x), exp(x) K_1(x))` for `x > 2`.
fn k01_steed_scaled(x: f64) -> (f64, f64) {
    let a1 = 0.25;
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut h = d;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 1..MAX_TERMS * 50 {
        let fi = i as f64;
        a -= 2.0 * fi;
        c = -a * c / (fi + 1.0);
        let q_next = (q1 - b * q2) / a;
        q1 = q2;
        q2 = q_next;
        q += c * q_next;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        let dels = q * delh;
        s += dels;
        if fabs(dels / s) < 1e-17 {
            break;
        }
    }
    h *= a1;
    let k0 = sqrt(core::f64::consts::PI / (2.0 * x)) / s;
    let k1 = k0 * (x + 0.5 - h) / x;
    (k0, k1)
}

fn check_domain(x: f64) -> Result<()> {
    if x > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain { function: "bessel_k", x })
    }
}

fn recur(order: i32, x: f64, k0: f64, k1: f64) -> f64 {
    match order.unsigned_abs() {
        0 => k0,
        1 => k1,
        n => {
            let (mut lo, mut hi) = (k0, k1);
            for m in 1..n {
                let next = lo + 2.0 * m as f64 / x * hi;
                lo = hi;
                hi = next;
            }
            hi
        }
    }
}

/// `K_n(x)` for integer `n` and `x > 0`. Underflows to zero beyond `x ~ 705`.
pub fn bessel_k(order: i32, x: f64) -> Result<f64> {
    check_domain(x)?;
    let (k0, k1) = if x <= SERIES_SWITCH {
        k01_series(x)
    } else {
        let (k0, k1) = k01_steed_scaled(x);
        let damp = exp(-x);
        (k0 * damp, k1 * damp)
    };
    Ok(recur(order, x, k0, k1))
}

/// `exp(x) K_n(x)`, finite for arbitrarily large `x`.
pub fn bessel_k_scaled(order: i32, x: f64) -> Result<f64> {
    check_domain(x)?;
    let (k0, k1) = if x <= SERIES_SWITCH {
        let (k0, k1) = k01_series(x);
        let grow = exp(x);
        (k0 * grow, k1 * grow)
    } else {
        k01_steed_scaled(x)
    };
    Ok(recur(order, x, k0, k1))
}

/// `K_0(x)`; NaN for `x <= 0`.
pub fn bessel_k0(x: f64) -> f64 {
    bessel_k(0, x).unwrap_or(f64::NAN)
}

/// `K_1(x)`; NaN for `x <= 0`.
pub fn bessel_k1(x: f64) -> f64 {
    bessel_k(1, x).unwrap_or(f64::NAN)
}
