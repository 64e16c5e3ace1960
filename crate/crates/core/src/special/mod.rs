//! Modified Bessel functions of the second kind, the error function family
//! and the Gaussian-damped rational integrals
//! `A_nu^mu(dbar) = int_0^inf exp(-t^2 dbar^2) t^mu / (1 + t^2)^nu dt`.

mod a_integral;
mod bessel;
mod erf;

pub use a_integral::{
    a_integral_closed, a_integral_quadrature, a_integral_small_dbar_products, large_dbar_product, AIntegralParams,
};
pub use bessel::{bessel_k, bessel_k0, bessel_k1, bessel_k_scaled};
pub use erf::{erf, erfc, erfcx};
