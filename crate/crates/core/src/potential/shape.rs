use num_complex::Complex64;

use super::params::OpticalPotentialParams;
use crate::math;

/// Woods-Saxon form factor f(r) = 1 / (1 + exp((r − R)/a)).
pub fn ws_shape(r: f64, radius: f64, diffuseness: f64) -> f64 {
    let t = (r - radius) / diffuseness;
    if t > 0.0 {
        let e = math::exp(-t);
        e / (1.0 + e)
    } else {
        1.0 / (1.0 + math::exp(t))
    }
}

/// df/dr = −f(1 − f)/a.
pub fn ws_shape_derivative(r: f64, radius: f64, diffuseness: f64) -> f64 {
    let f = ws_shape(r, radius, diffuseness);
    let g = ws_shape(radius, r, diffuseness); // 1 − f without cancellation
    -f * g / diffuseness
}

/// g(r) = f'(r)/r, the spin-orbit radial factor. Singular as 1/r at the
/// origin because f'(0) ≠ 0.
pub fn ws_shape_over_r(r: f64, radius: f64, diffuseness: f64) -> f64 {
    ws_shape_derivative(r, radius, diffuseness) / r
}

/// Real volume term −V_r f(r).
pub fn volume_r(r: f64, p: &OpticalPotentialParams) -> f64 {
    let g = p.volume_geometry();
    -p.v_r * ws_shape(r, g.radius, g.diffuseness)
}

/// Absorptive volume term −W_v f(r) on the surface geometry.
pub fn absorptive_volume_r(r: f64, p: &OpticalPotentialParams) -> f64 {
    let g = p.surface_geometry();
    -p.w_v * ws_shape(r, g.radius, g.diffuseness)
}

/// Surface term −W_s(−4a_s) f'(r) = 4 a_s W_s f'(r).
pub fn surface_r(r: f64, p: &OpticalPotentialParams) -> f64 {
    let g = p.surface_geometry();
    4.0 * g.diffuseness * p.w_s * ws_shape_derivative(r, g.radius, g.diffuseness)
}

/// Radial factor of the spin-orbit term, 2(V_so + iW_so) g(r); the l·σ
/// operator is not included.
pub fn spin_orbit_r(r: f64, p: &OpticalPotentialParams) -> Complex64 {
    let g = p.spin_orbit_geometry();
    Complex64::new(p.v_so, p.w_so) * (2.0 * ws_shape_over_r(r, g.radius, g.diffuseness))
}

/// Coulomb potential of a uniformly charged sphere of radius R_c (MeV).
pub fn coulomb_r(r: f64, p: &OpticalPotentialParams) -> f64 {
    let rc = p.coulomb_radius();
    let k = p.coulomb_strength();
    if r < rc {
        k * (3.0 - r * r / (rc * rc)) / (2.0 * rc)
    } else {
        k / r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::E_SQUARED;

    #[test]
    fn shape_closed_forms() {
        assert_eq!(ws_shape(2.0, 2.0, 0.5), 0.5);
        assert!((ws_shape(0.0, 20.0, 0.5) - 1.0).abs() < 1e-17);
        let want = 1.0 / (1.0 + libm::exp(10.0));
        assert!((ws_shape(2.0 + 10.0 * 0.5, 2.0, 0.5) - want).abs() < 1e-20);
    }

    #[test]
    fn shape_is_monotone_decreasing() {
        let mut prev = ws_shape(0.0, 2.9, 0.68);
        for i in 1..400 {
            let f = ws_shape(i as f64 * 0.05, 2.9, 0.68);
            assert!(f < prev);
            prev = f;
        }
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let (radius, a) = (2.04, 0.586);
        for &r in &[0.3, 1.5, 2.04, 3.7] {
            let h = 1e-5;
            let fd = (ws_shape(r + h, radius, a) - ws_shape(r - h, radius, a)) / (2.0 * h);
            assert!((ws_shape_derivative(r, radius, a) - fd).abs() < 1e-9);
        }
    }

    #[test]
    fn deep_volume_well() {
        let p = OpticalPotentialParams {
            r_v: 8.0,
            a_v: 0.5,
            ..Default::default()
        };
        assert!((volume_r(0.0, &p) + p.v_r).abs() < 0.01 * p.v_r);
    }

    #[test]
    fn coulomb_center_continuity_and_tail() {
        let p = OpticalPotentialParams::default();
        let rc = p.coulomb_radius();
        let k = 6.0 * E_SQUARED;
        assert!((coulomb_r(0.0, &p) - 1.5 * k / rc).abs() < 1e-14);
        let inside = k * (3.0 - 1.0) / (2.0 * rc);
        assert!((coulomb_r(rc, &p) - inside).abs() < 1e-14);
        assert!((coulomb_r(rc * (1.0 - 1e-12), &p) - coulomb_r(rc, &p)).abs() < 1e-10);
        assert!((coulomb_r(5.0, &p) - 6.0 * 1.43996 / 5.0).abs() < 1e-15);
    }
}
