//! Optical potential: Woods-Saxon volume, surface and spin-orbit terms plus
//! the uniform-sphere Coulomb field, in coordinate and momentum space.

mod coulomb;
mod params;
mod shape;
mod transforms;

use num_complex::Complex64;

pub use coulomb::{
    ft_coulomb, ft_coulomb_numeric, ft_coulomb_sphere, sphere_form_factor, BASE_SCREENING_PERIODS,
};
pub use params::{AbsorptiveCoupling, Geometry, OpticalPotentialParams, RadiusConvention};
pub use shape::{
    absorptive_volume_r, coulomb_r, spin_orbit_r, surface_r, volume_r, ws_shape,
    ws_shape_derivative, ws_shape_over_r,
};
pub use transforms::{
    cosine_moment, derivative_moment_over_q, ft_absorptive_volume, ft_spin_orbit, ft_surface,
    ft_volume_ws, literal, sine_moment_over_q, to_plain_transform, SMALL_Q,
};

use crate::constants::TRANSFORM_NORMALIZATION;
use crate::oracle;
use crate::Result;

/// Which Coulomb transform enters the summed potential.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum CoulombModel {
    /// Screened-tail numerical transform extrapolated to no screening.
    #[default]
    Numeric,
    /// Analytic uniform-sphere transform.
    SphereFormFactor,
    /// Closed form with fixed length scale (see [`ft_coulomb`]).
    Literal,
    /// Nuclear terms only.
    Off,
}

/// Momentum-space potential components at one q, in the closed-form
/// normalization (MeV·fm³ times [`TRANSFORM_NORMALIZATION`]).
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MomentumSpacePotential {
    pub q: f64,
    pub volume: Complex64,
    pub surface: Complex64,
    pub spin_orbit: Complex64,
    pub coulomb: Complex64,
    pub total: Complex64,
}

impl MomentumSpacePotential {
    /// Total as the plain transform ∫d³r e^{iq·r} U(r) (MeV·fm³).
    pub fn plain_total(&self) -> Complex64 {
        self.total / TRANSFORM_NORMALIZATION
    }
}

/// Coherent sum of the transformed terms with the chosen Coulomb model.
pub fn potential_q(
    q: f64,
    p: &OpticalPotentialParams,
    coulomb: CoulombModel,
) -> Result<MomentumSpacePotential> {
    p.validate()?;
    let unit = match p.absorptive_coupling {
        AbsorptiveCoupling::Imaginary => Complex64::new(0.0, 1.0),
        AbsorptiveCoupling::Real => Complex64::new(1.0, 0.0),
    };
    let volume = ft_volume_ws(q, p)? + unit * ft_absorptive_volume(q, p)?;
    let surface = unit * ft_surface(q, p)?;
    let spin_orbit = ft_spin_orbit(q, p)?;
    let coulomb = if p.coulomb_strength() == 0.0 {
        Complex64::new(0.0, 0.0)
    } else {
        match coulomb {
            CoulombModel::Numeric => ft_coulomb_numeric(q, p)?.into(),
            CoulombModel::SphereFormFactor => ft_coulomb_sphere(q, p)?.into(),
            CoulombModel::Literal => ft_coulomb(q, p)?,
            CoulombModel::Off => Complex64::new(0.0, 0.0),
        }
    };
    Ok(MomentumSpacePotential {
        q,
        volume,
        surface,
        spin_orbit,
        coulomb,
        total: volume + surface + spin_orbit + coulomb,
    })
}

/// Full potential including the numerical Coulomb transform.
pub fn total_potential_q(q: f64, p: &OpticalPotentialParams) -> Result<MomentumSpacePotential> {
    potential_q(q, p, CoulombModel::Numeric)
}

/// Nuclear terms only.
pub fn nuclear_potential_q(q: f64, p: &OpticalPotentialParams) -> Result<MomentumSpacePotential> {
    potential_q(q, p, CoulombModel::Off)
}

/// Ratio of the closed-form volume transform to the radial quadrature
/// (4π/q)∫r sin(qr)V(r)dr at `q_ref`. Equals [`TRANSFORM_NORMALIZATION`]
/// when the closed form is right.
pub fn calibrate_normalization(p: &OpticalPotentialParams, q_ref: f64) -> Result<f64> {
    let g = p.volume_geometry();
    let closed = ft_volume_ws(q_ref, p)?;
    let numeric =
        oracle::radial_transform(|r| volume_r(r, p), q_ref, g.radius + 40.0 * g.diffuseness)?;
    Ok(closed / numeric)
}
