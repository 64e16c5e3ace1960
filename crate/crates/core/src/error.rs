use core::fmt;

use num_complex::Complex64;

/// Errors raised by the numerical routines.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// Argument outside the domain of a function, e.g. `K_nu(x)` with `x <= 0`.
    Domain { function: &'static str, x: f64 },
    /// No closed form is implemented for this `A_nu^mu` order.
    UnsupportedOrder { nu: f64, mu: u32 },
    /// Adaptive quadrature ran out of refinement before meeting its tolerance.
    QuadratureFailure {
        best_estimate: Complex64,
        error_estimate: f64,
        evaluations: usize,
    },
    /// Two grid refinements of the variance oracle disagree.
    GridResolution { coarse: f64, fine: f64 },
    InvalidInput(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { function, x } => write!(f, "{function}: argument {x} outside domain"),
            Error::UnsupportedOrder { nu, mu } => {
                write!(f, "no closed form for A integral with nu = {nu}, mu = {mu}")
            }
            Error::QuadratureFailure {
                best_estimate,
                error_estimate,
                evaluations,
            } => write!(
                f,
                "quadrature did not converge after {evaluations} evaluations \
                 (best estimate {best_estimate}, error estimate {error_estimate:e})"
            ),
            Error::GridResolution { coarse, fine } => write!(
                f,
                "variance oracle grid not converged: coarse {coarse}, fine {fine}"
            ),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
