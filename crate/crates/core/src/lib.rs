//! Laser-assisted proton–nucleus elastic scattering in first Born approximation.
//!
//! The crate is `no_std` (it needs `alloc`) and is organized bottom-up:
//!
//! * [`special`]: integer-order Bessel functions, sine/cosine integrals and the
//!   two-colour generalized Bessel coefficients `C_n(a, b; φ)`.
//! * [`potential`]: Woods-Saxon optical potential plus uniform-sphere Coulomb,
//!   in coordinate space and as closed-form momentum-space transforms.
//! * [`kinematics`]: laser and beam descriptions, photon-order energy
//!   conservation, momentum transfer and the dressing arguments `a`, `b_m`.
//! * [`cross_section`]: Born and laser-dressed differential cross sections,
//!   inelastic fractions, phase/intensity scans and angle-integrated totals.
//!
//! Everything is a pure function of its inputs, so all values are `Send + Sync`
//! and scans can be spread across threads by the caller.

#![cfg_attr(not(any(feature = "std", test)), no_std)]
// Negated comparisons reject NaN along with out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod constants;
pub mod cross_section;
mod error;
pub mod kinematics;
mod math;
pub mod oracle;
pub mod potential;
pub mod quadrature;
pub mod special;

pub use error::{Error, Result};
pub use num_complex::Complex64;
