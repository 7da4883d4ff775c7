//! Physical constants in the MeV / fm unit system used throughout the crate.

/// ħc (MeV·fm)
pub const HBAR_C: f64 = 197.3269631;

/// Proton rest energy m_p c² (MeV)
pub const PROTON_MASS: f64 = 938.272;

/// Electron rest energy m_e c² (MeV)
pub const ELECTRON_MASS: f64 = 0.510999;

/// Proton-to-electron mass ratio as used in the dimensionless intensity
/// parameter scaling.
pub const PROTON_ELECTRON_MASS_RATIO: f64 = 1836.0;

/// e²/(4πε₀) = α·ħc (MeV·fm)
pub const E_SQUARED: f64 = 1.43996;

/// Prefactor in a₀ = K·√I[W/cm²]·λ[μm].
pub const A0_PREFACTOR: f64 = 8.55e-10;

/// Photon energy times wavelength, ħω[eV]·λ[μm].
pub const PHOTON_EV_MICRON: f64 = 1.239_841_98;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// 1 fm² = 10 mb.
pub const MB_PER_FM2: f64 = 10.0;

/// Ratio between the closed-form momentum-space potentials (which carry the
/// 1/π² prefactors) and the plain transform ∫d³r e^{iq·r} V(r).
///
/// Equal to (2π)⁻³; `potential::calibrate_normalization` re-derives it
/// numerically.
pub const TRANSFORM_NORMALIZATION: f64 =
    1.0 / (8.0 * core::f64::consts::PI * core::f64::consts::PI * core::f64::consts::PI);
