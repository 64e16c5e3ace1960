use core::f64::consts::PI;

use libm::{exp, pow, sqrt};

use super::{bessel_k_scaled, erfcx};
use alloc::vec::Vec;

use crate::quadrature::{integrate_adaptive_with_breaks, QuadratureResult, QuadratureSpec};
use crate::{Error, Result};

const SQRT_PI: f64 = 1.772_453_850_905_516_027_298_167_483_341_145_2;

/// Parameters of `A_nu^mu(dbar)`; `dbar` is the packet width in Compton
/// wavelengths.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AIntegralParams {
    pub nu: f64,
    pub mu: u32,
    pub dbar: f64,
}

impl AIntegralParams {
    pub fn new(nu: f64, mu: u32, dbar: f64) -> Result<Self> {
        if !(dbar > 0.0 && dbar.is_finite()) {
            return Err(Error::InvalidInput("dbar must be positive and finite"));
        }
        if !(nu > 0.0 && nu.is_finite()) {
            return Err(Error::InvalidInput("nu must be positive"));
        }
        Ok(AIntegralParams { nu, mu, dbar })
    }

    /// `D = dbar^2 / 2`, the argument of the Bessel function in `A_{1/2}^0`.
    pub fn half_dbar_sq(&self) -> f64 {
        0.5 * self.dbar * self.dbar
    }
}

/// Closed forms for `(nu, mu)` in `{(1/2, 0), (1, 0), (2, 0)}`:
///
/// * `A_{1/2}^0 = exp(D) K_0(D) / 2` with `D = dbar^2 / 2`
/// * `A_1^0 = (pi/2) exp(dbar^2) erfc(dbar)`
/// * `A_2^0 = (pi/4) exp(dbar^2) (2 dbar^2 - 1) (erf(dbar) - 1) + sqrt(pi) dbar / 2`
///
/// The products `exp(..) K_0` and `exp(..) erfc` go through the scaled
/// functions, so nothing overflows at large `dbar`.
pub fn a_integral_closed(params: &AIntegralParams) -> Result<f64> {
    let d = params.dbar;
    if !(d > 0.0) {
        return Err(Error::InvalidInput("dbar must be positive"));
    }
    match (params.nu, params.mu) {
        (nu, 0) if nu == 0.5 => Ok(0.5 * bessel_k_scaled(0, params.half_dbar_sq())?),
        (nu, 0) if nu == 1.0 => Ok(0.5 * PI * erfcx(d)),
        (nu, 0) if nu == 2.0 => Ok(-0.25 * PI * (2.0 * d * d - 1.0) * erfcx(d) + 0.5 * SQRT_PI * d),
        (nu, mu) => Err(Error::UnsupportedOrder { nu, mu }),
    }
}

/// Direct quadrature of the defining integral over `[0, t_max]` with
/// `t_max = max(50, 40 / dbar)`, where the Gaussian factor is below
/// `exp(-1600)`.
pub fn a_integral_quadrature(params: &AIntegralParams, spec: &QuadratureSpec) -> Result<QuadratureResult<f64>> {
    let AIntegralParams { nu, mu, dbar } = *params;
    if !(dbar > 0.0 && nu > 0.0) {
        return Err(Error::InvalidInput("need dbar > 0 and nu > 0"));
    }
    let t_max = 50.0_f64.max(40.0 / dbar);
    let d2 = dbar * dbar;
    let integrand = |t: f64| {
        let t2 = t * t;
        exp(-t2 * d2) * pow(t, mu as f64) / pow(1.0 + t2, nu)
    };
    let spec = QuadratureSpec {
        tail_cutoff: Some(t_max),
        ..*spec
    };
    // The Gaussian has width 1/dbar and the rational factor width 1; seed
    // breaks at both scales so a narrow Gaussian is never stepped over.
    let mut breaks: Vec<f64> = Vec::with_capacity(24);
    breaks.push(0.0);
    let mut edge = (1.0 / dbar).min(1.0) / 8.0;
    while edge < t_max {
        breaks.push(edge);
        edge *= 2.0;
    }
    breaks.push(t_max);
    integrate_adaptive_with_breaks(integrand, &breaks, &spec)
}

/// `dbar * A_nu^0` for `nu = 1/2, 1, 2`, all of which vanish as `dbar -> 0`.
pub fn a_integral_small_dbar_products(dbar: f64) -> Result<[f64; 3]> {
    let mut out = [0.0; 3];
    for (slot, nu) in out.iter_mut().zip([0.5, 1.0, 2.0]) {
        *slot = dbar * a_integral_closed(&AIntegralParams::new(nu, 0, dbar)?)?;
    }
    Ok(out)
}

/// `(dbar / sqrt(pi)) A_nu^0`, which tends to `1/2` as `dbar -> inf` for
/// each of the three closed-form orders.
pub fn large_dbar_product(nu: f64, dbar: f64) -> Result<f64> {
    Ok(dbar / sqrt(PI) * a_integral_closed(&AIntegralParams::new(nu, 0, dbar)?)?)
}
