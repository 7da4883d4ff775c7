//! Special functions: integer-order Bessel J, sine/cosine integrals and the
//! two-colour generalized Bessel coefficients.

mod bessel;
mod generalized;
mod trig_integrals;

pub use bessel::{bessel_j, bessel_j_sequence, significant_order, BesselTable, MAX_ARGUMENT};
pub use generalized::{
    adaptive_window, conjugate_symmetry_phase, dressing_spectrum, generalized_bessel,
    DressingSpectrum, GeneralizedBessel, GeneralizedBesselParams, Truncation, INCOMPLETE_RESIDUAL,
};
pub use trig_integrals::{cosine_integral, sine_integral};
