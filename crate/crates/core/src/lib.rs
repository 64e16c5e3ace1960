//! Numerical operators for the Foldy-Wouthuysen (FW) and Moss-Okninski (MO)
//! transformations of the free Dirac equation, and measures of their
//! coordinate-space non-locality.
//!
//! All quantities use natural units: `hbar = m = c = 1`, so the Compton
//! wavelength is 1, lengths are in Compton wavelengths, momenta in `mc`
//! and energies in `mc^2`.
//!
//! The crate is `no_std` and only needs `alloc` (for adaptive quadrature
//! work lists and sampled profile curves).

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod dirac;
mod error;
pub mod fd;
pub mod quadrature;
pub mod special;
pub mod transform;
pub mod variance;

pub use dirac::{FourSpinor, Matrix4C, Momentum3};
pub use error::Error;
pub use num_complex::Complex64;
pub use quadrature::{QuadratureResult, QuadratureSpec};
pub use transform::{MomentResult, PacketSpec, ProfileCurve, ProfileKind, TransformKind};
pub use variance::VarianceResult;

pub type Result<T> = core::result::Result<T, Error>;
