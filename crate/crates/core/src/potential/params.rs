use crate::error::ensure_finite;
use crate::math;
use crate::{Error, Result};

/// How the tabulated radius parameters become radii.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum RadiusConvention {
    /// R = r·A^{1/3}.
    Reduced,
    /// R = r, used as given in fm.
    #[default]
    Absolute,
}

/// How the absorptive strengths (W_v, W_s) enter the summed potential.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum AbsorptiveCoupling {
    /// U = V_c + V_ws + i(W + W_s) + V_ls.
    Imaginary,
    /// All transformed terms summed as real amplitudes, U = V_c + V_ws + W + W_s + V_ls.
    #[default]
    Real,
}

/// Woods-Saxon optical potential with a uniform-sphere Coulomb term.
///
/// Strengths in MeV, lengths in fm.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default, deny_unknown_fields))]
pub struct OpticalPotentialParams {
    pub v_r: f64,
    pub w_v: f64,
    pub w_s: f64,
    pub v_so: f64,
    pub w_so: f64,
    pub a_v: f64,
    pub a_s: f64,
    pub a_so: f64,
    pub r_v: f64,
    pub r_s: f64,
    pub r_so: f64,
    /// Coulomb reduced radius; R_c = r_c·A^{1/3} in either convention.
    pub r_c: f64,
    pub mass_number: f64,
    pub z_p: f64,
    pub z_t: f64,
    pub radius_convention: RadiusConvention,
    pub absorptive_coupling: AbsorptiveCoupling,
}

impl Default for OpticalPotentialParams {
    /// 49 MeV p + ¹²C parameter set.
    fn default() -> Self {
        Self {
            v_r: 31.31,
            w_v: 0.0,
            w_s: 5.98,
            v_so: 2.79,
            w_so: 0.0,
            a_v: 0.68,
            a_s: 0.586,
            a_so: 0.22,
            r_v: 1.276,
            r_s: 0.89,
            r_so: 0.716,
            r_c: 1.25,
            mass_number: 12.0,
            z_p: 1.0,
            z_t: 6.0,
            radius_convention: RadiusConvention::default(),
            absorptive_coupling: AbsorptiveCoupling::default(),
        }
    }
}

/// Radius and diffuseness of one Woods-Saxon form factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geometry {
    pub radius: f64,
    pub diffuseness: f64,
}

impl OpticalPotentialParams {
    pub fn validate(&self) -> Result<()> {
        for v in [
            self.v_r, self.w_v, self.w_s, self.v_so, self.w_so, self.z_p, self.z_t,
        ] {
            ensure_finite("potential strength or charge must be finite", v)?;
        }
        let positive = [
            ("a_v", self.a_v),
            ("a_s", self.a_s),
            ("a_so", self.a_so),
            ("r_v", self.r_v),
            ("r_s", self.r_s),
            ("r_so", self.r_so),
            ("r_c", self.r_c),
        ];
        for (name, v) in positive {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidParameter {
                    name,
                    reason: "radii and diffusenesses must be positive and finite",
                });
            }
        }
        if !(self.mass_number.is_finite() && self.mass_number >= 1.0) {
            return Err(Error::InvalidParameter {
                name: "mass_number",
                reason: "target mass number must be at least 1",
            });
        }
        Ok(())
    }

    fn scale(&self) -> f64 {
        match self.radius_convention {
            RadiusConvention::Reduced => math::cbrt(self.mass_number),
            RadiusConvention::Absolute => 1.0,
        }
    }

    pub fn volume_geometry(&self) -> Geometry {
        Geometry {
            radius: self.r_v * self.scale(),
            diffuseness: self.a_v,
        }
    }

    /// Shared by the surface and the imaginary volume term.
    pub fn surface_geometry(&self) -> Geometry {
        Geometry {
            radius: self.r_s * self.scale(),
            diffuseness: self.a_s,
        }
    }

    pub fn spin_orbit_geometry(&self) -> Geometry {
        Geometry {
            radius: self.r_so * self.scale(),
            diffuseness: self.a_so,
        }
    }

    pub fn coulomb_radius(&self) -> f64 {
        self.r_c * math::cbrt(self.mass_number)
    }

    /// Z_p Z_t e² in MeV·fm.
    pub fn coulomb_strength(&self) -> f64 {
        self.z_p * self.z_t * crate::constants::E_SQUARED
    }

    /// Copy with every strength multiplied by `factor`.
    pub fn scaled_strengths(&self, factor: f64) -> Self {
        Self {
            v_r: self.v_r * factor,
            w_v: self.w_v * factor,
            w_s: self.w_s * factor,
            v_so: self.v_so * factor,
            w_so: self.w_so * factor,
            ..*self
        }
    }

    /// Copy with only the real volume strength kept.
    pub fn volume_only(&self) -> Self {
        Self {
            w_v: 0.0,
            w_s: 0.0,
            v_so: 0.0,
            w_so: 0.0,
            z_p: 0.0,
            ..*self
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radii_follow_convention() {
        let mut p = OpticalPotentialParams {
            radius_convention: RadiusConvention::Reduced,
            ..OpticalPotentialParams::default()
        };
        let r = p.volume_geometry().radius;
        assert!((r - 1.276 * 12f64.cbrt()).abs() < 1e-14);
        assert!((r - 2.92).abs() < 0.01);
        p.radius_convention = RadiusConvention::Absolute;
        assert_eq!(p.volume_geometry().radius, 1.276);
        assert!((p.coulomb_radius() - 1.25 * 12f64.cbrt()).abs() < 1e-14);
    }

    #[test]
    fn validation() {
        assert!(OpticalPotentialParams::default().validate().is_ok());
        let p = OpticalPotentialParams {
            a_s: 0.0,
            ..Default::default()
        };
        assert!(matches!(
            p.validate(),
            Err(Error::InvalidParameter { name: "a_s", .. })
        ));
        let p = OpticalPotentialParams {
            mass_number: 0.5,
            ..Default::default()
        };
        assert!(p.validate().is_err());
    }
}
