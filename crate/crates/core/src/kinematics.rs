//! Laser and beam descriptions, photon-order energy conservation, momentum
//! transfer and the dimensionless dressing arguments.

use crate::constants::{
    A0_PREFACTOR, HBAR_C, PHOTON_EV_MICRON, PROTON_ELECTRON_MASS_RATIO, PROTON_MASS,
};
use crate::error::ensure_finite;
use crate::math;
use crate::{Error, Result};

/// Above this proton intensity parameter the dipole, non-relativistic
/// treatment is questionable; callers should warn.
pub const DIPOLE_WARNING_THRESHOLD: f64 = 0.1;

/// Which expression produces the dressing arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum ArgumentFormula {
    /// a = (m_e/m_p)a₀·p_i c(1 − cos θ)/ħω, and likewise for the harmonic
    /// with its own a_m and photon energy mħω.
    Exact,
    /// a = 10⁻⁴√I(1 − cos θ), b_m = 10⁻⁴√I_m(1 − cos θ)/m.
    #[default]
    Simplified,
}

/// Two-colour, linearly polarized laser field: fundamental plus its m-th
/// harmonic with relative phase φ̃. Polarization is along the incident
/// momentum.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default, deny_unknown_fields))]
pub struct LaserField {
    /// Fundamental wavelength (μm).
    pub wavelength: f64,
    /// Fundamental intensity (W/cm²).
    pub intensity: f64,
    /// Harmonic intensity (W/cm²); zero gives a monochromatic field.
    pub harmonic_intensity: f64,
    /// Harmonic order m ≥ 2.
    pub harmonic: u32,
    /// Relative phase φ̃ (rad).
    pub phase: f64,
    pub argument_formula: ArgumentFormula,
}

impl Default for LaserField {
    /// Ti:sapphire at 800 nm with its second harmonic, 10¹² W/cm² each.
    fn default() -> Self {
        Self {
            wavelength: 0.8,
            intensity: 1e12,
            harmonic_intensity: 1e12,
            harmonic: 2,
            phase: 0.0,
            argument_formula: ArgumentFormula::default(),
        }
    }
}

impl LaserField {
    pub fn validate(&self) -> Result<()> {
        if !(self.wavelength.is_finite() && self.wavelength > 0.0) {
            return Err(Error::InvalidParameter {
                name: "wavelength",
                reason: "wavelength must be positive",
            });
        }
        for (name, i) in [
            ("intensity", self.intensity),
            ("harmonic_intensity", self.harmonic_intensity),
        ] {
            if !(i.is_finite() && i >= 0.0) {
                return Err(Error::InvalidParameter {
                    name,
                    reason: "intensities must be non-negative",
                });
            }
        }
        if self.harmonic < 2 {
            return Err(Error::InvalidParameter {
                name: "harmonic",
                reason: "harmonic order must be at least 2",
            });
        }
        ensure_finite("relative phase must be finite", self.phase)?;
        Ok(())
    }

    /// Fundamental photon energy ħω (eV).
    pub fn photon_energy_ev(&self) -> f64 {
        PHOTON_EV_MICRON / self.wavelength
    }

    pub fn is_monochromatic(&self) -> bool {
        self.harmonic_intensity == 0.0
    }

    /// Largest proton intensity parameter of the two colours.
    pub fn proton_intensity_parameter(&self) -> f64 {
        let fundamental = intensity_to_a0(self.intensity, self.wavelength).unwrap_or(f64::NAN);
        let harmonic = intensity_to_a0(
            self.harmonic_intensity,
            self.wavelength / self.harmonic as f64,
        )
        .unwrap_or(f64::NAN);
        proton_scaled(fundamental.max(harmonic))
    }

    pub fn needs_dipole_warning(&self) -> bool {
        self.proton_intensity_parameter() > DIPOLE_WARNING_THRESHOLD
    }
}

/// Projectile and target for a fixed-target collision.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default, deny_unknown_fields))]
pub struct Beam {
    /// Laboratory kinetic energy (MeV).
    pub kinetic_energy: f64,
    /// Projectile rest energy (MeV).
    pub projectile_mass: f64,
}

impl Default for Beam {
    /// 49 MeV protons.
    fn default() -> Self {
        Self {
            kinetic_energy: 49.0,
            projectile_mass: PROTON_MASS,
        }
    }
}

impl Beam {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("kinetic_energy", self.kinetic_energy),
            ("projectile_mass", self.projectile_mass),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidParameter {
                    name,
                    reason: "must be positive and finite",
                });
            }
        }
        Ok(())
    }

    /// Non-relativistic incident momentum p_i c = √(2mc²E) (MeV).
    pub fn incident_momentum(&self) -> f64 {
        math::sqrt(2.0 * self.projectile_mass * self.kinetic_energy)
    }
}

/// Kinematics of the channel with n net photons emitted (n > 0) or absorbed
/// (n < 0).
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Kinematics {
    /// MeV/c
    pub p_i: f64,
    /// MeV/c
    pub p_f: f64,
    pub theta: f64,
    /// fm⁻¹
    pub q: f64,
    pub n: i64,
}

impl Kinematics {
    pub fn new(beam: &Beam, photon_energy_ev: f64, n: i64, theta: f64) -> Result<Self> {
        beam.validate()?;
        let p_i = beam.incident_momentum();
        let p_f = final_momentum(p_i, n, photon_energy_ev, beam.projectile_mass)?;
        Ok(Self {
            p_i,
            p_f,
            theta,
            q: momentum_transfer(p_i, p_f, theta),
            n,
        })
    }

    pub fn momentum_ratio(&self) -> f64 {
        self.p_f / self.p_i
    }
}

/// Dimensionless intensity parameter a₀ = 8.55·10⁻¹⁰ √I λ (I in W/cm², λ in μm).
pub fn intensity_to_a0(intensity: f64, wavelength: f64) -> Result<f64> {
    if !(intensity.is_finite() && intensity >= 0.0) {
        return Err(Error::Domain {
            what: "intensity must be non-negative",
            value: intensity,
        });
    }
    Ok(A0_PREFACTOR * math::sqrt(intensity) * wavelength)
}

/// a_p = a₀ m_e/m_p.
pub fn proton_scaled(a0: f64) -> f64 {
    a0 / PROTON_ELECTRON_MASS_RATIO
}

/// Intensity at which the proton parameter a_p reaches one.
pub fn proton_critical_intensity(wavelength: f64) -> f64 {
    let root = PROTON_ELECTRON_MASS_RATIO / (A0_PREFACTOR * wavelength);
    root * root
}

/// Final momentum from (p_f² − p_i²)/2m + nħω = 0 (MeV/c).
pub fn final_momentum(
    p_i: f64,
    n: i64,
    photon_energy_ev: f64,
    projectile_mass: f64,
) -> Result<f64> {
    if !(p_i.is_finite() && p_i > 0.0) {
        return Err(Error::Domain {
            what: "incident momentum must be positive",
            value: p_i,
        });
    }
    let p_f_squared = p_i * p_i - 2.0 * projectile_mass * n as f64 * photon_energy_ev * 1e-6;
    if p_f_squared <= 0.0 {
        return Err(Error::ChannelClosed {
            order: n,
            p_f_squared,
        });
    }
    Ok(math::sqrt(p_f_squared))
}

/// |p_i − p_f|/ħ from the law of cosines (fm⁻¹), written as
/// (p_i − p_f)² + 4p_ip_f sin²(θ/2) to avoid cancellation at small angles.
pub fn momentum_transfer(p_i: f64, p_f: f64, theta: f64) -> f64 {
    let s = math::sin(0.5 * theta);
    let d = p_i - p_f;
    math::sqrt(d * d + 4.0 * p_i * p_f * s * s) / HBAR_C
}

/// 2p_i|sin(θ/2)|/ħ (fm⁻¹), the elastic-limit momentum transfer.
pub fn momentum_transfer_approx(p_i: f64, theta: f64) -> f64 {
    2.0 * p_i * math::abs(math::sin(0.5 * theta)) / HBAR_C
}

fn one_minus_cos(theta: f64) -> f64 {
    let s = math::sin(0.5 * theta);
    2.0 * s * s
}

/// Dressing arguments (a, b_m) at scattering angle `theta` using the
/// laser's own formula choice.
pub fn dressing_arguments_with(laser: &LaserField, beam: &Beam, theta: f64) -> Result<(f64, f64)> {
    match laser.argument_formula {
        ArgumentFormula::Exact => dressing_arguments(laser, beam, theta),
        ArgumentFormula::Simplified => dressing_arguments_simplified(laser, theta),
    }
}

/// Exact dressing arguments with polarization along p_i, so that
/// ε·(p_i − p_f) = p_i(1 − cos θ).
pub fn dressing_arguments(laser: &LaserField, beam: &Beam, theta: f64) -> Result<(f64, f64)> {
    laser.validate()?;
    beam.validate()?;
    let m = laser.harmonic as f64;
    let transfer = beam.incident_momentum() * one_minus_cos(theta); // MeV
    let photon = laser.photon_energy_ev() * 1e-6; // MeV
    let a_p = proton_scaled(intensity_to_a0(laser.intensity, laser.wavelength)?);
    let a_pm = proton_scaled(intensity_to_a0(
        laser.harmonic_intensity,
        laser.wavelength / m,
    )?);
    Ok((a_p * transfer / photon, a_pm * transfer / (m * photon)))
}

/// Collected-constant form: a = 10⁻⁴√I(1 − cos θ), b_m = 10⁻⁴√I_m(1 − cos θ)/m.
pub fn dressing_arguments_simplified(laser: &LaserField, theta: f64) -> Result<(f64, f64)> {
    laser.validate()?;
    let c = 1e-4 * one_minus_cos(theta);
    Ok((
        c * math::sqrt(laser.intensity),
        c * math::sqrt(laser.harmonic_intensity) / laser.harmonic as f64,
    ))
}
