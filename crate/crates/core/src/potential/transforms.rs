//! Closed-form momentum-space transforms of the Woods-Saxon terms.
//!
//! All functions return values in the closed-form normalization, which is
//! [`TRANSFORM_NORMALIZATION`]·∫d³r e^{iq·r} V(r). The exponentially small
//! pole contributions are summed until they stop changing the result.

use core::f64::consts::PI;

use num_complex::Complex64;

use super::params::{Geometry, OpticalPotentialParams};
use crate::constants::TRANSFORM_NORMALIZATION;
use crate::math;
use crate::{Error, Result};

/// Below this q (fm⁻¹) the moments are continued from larger q.
pub const SMALL_Q: f64 = 1e-4;
const CONTINUATION_NODES: [f64; 3] = [2.5e-3, 5e-3, 1e-2];
const MAX_POLES: usize = 100_000;

pub(crate) fn check_q(q: f64) -> Result<f64> {
    if !q.is_finite() || q < 0.0 {
        return Err(Error::Domain {
            what: "momentum transfer must be finite and non-negative",
            value: q,
        });
    }
    Ok(q)
}

/// Σ_{n≥1} (−1)^{n−1} n^power e^{−nR/a} / (n² + a²q²)^order
fn pole_series(q: f64, g: Geometry, power: i32, order: i32) -> f64 {
    let aq2 = (g.diffuseness * q) * (g.diffuseness * q);
    let decay = math::exp(-g.radius / g.diffuseness);
    let mut weight = 1.0;
    let mut sign = 1.0;
    let mut sum = 0.0;
    for n in 1..=MAX_POLES {
        weight *= decay;
        if weight == 0.0 {
            break;
        }
        let nf = n as f64;
        let term = sign * math::powi(nf, power) * weight / math::powi(nf * nf + aq2, order);
        sum += term;
        if math::abs(term) <= 1e-17 * math::abs(sum) {
            break;
        }
        sign = -sign;
    }
    sum
}

/// (πa / sinh(πaq), coth(πaq)) computed from x = e^{−πaq} without cancellation.
fn hyperbolic_factors(q: f64, a: f64) -> (f64, f64) {
    let s = PI * a * q;
    let x = math::exp(-s);
    let one_minus_x2 = -math::expm1(-2.0 * s);
    (
        2.0 * PI * a * x / one_minus_x2,
        (1.0 + x * x) / one_minus_x2,
    )
}

/// Even quartic in q through the continuation nodes, evaluated at q.
fn continue_even(q: f64, f: impl Fn(f64) -> f64) -> f64 {
    let s: [f64; 3] = CONTINUATION_NODES.map(|x| x * x);
    let y: [f64; 3] = CONTINUATION_NODES.map(&f);
    let t = q * q;
    let mut acc = 0.0;
    for i in 0..3 {
        let mut w = 1.0;
        for j in 0..3 {
            if i != j {
                w *= (t - s[j]) / (s[i] - s[j]);
            }
        }
        acc += w * y[i];
    }
    acc
}

/// ∫₀^∞ r sin(qr) f(r) dr / q, even in q.
pub fn sine_moment_over_q(q: f64, g: Geometry) -> f64 {
    let exact = |q: f64| {
        let a = g.diffuseness;
        let r = g.radius;
        let (csch, coth) = hyperbolic_factors(q, a);
        let (s, c) = math::sin_cos(q * r);
        let main = csch * (PI * a * coth * s - r * c);
        main / q + 2.0 * a * a * a * pole_series(q, g, 1, 2)
    };
    if q < SMALL_Q {
        continue_even(q, exact)
    } else {
        exact(q)
    }
}

/// ∫₀^∞ r sin(qr) f'(r) dr / q, even in q.
pub fn derivative_moment_over_q(q: f64, g: Geometry) -> f64 {
    let exact = |q: f64| {
        let a = g.diffuseness;
        let r = g.radius;
        let (csch, coth) = hyperbolic_factors(q, a);
        let (s, c) = math::sin_cos(q * r);
        let main = -csch * ((PI * a * q * coth - 1.0) * c + r * q * s);
        main / q + 2.0 * a * a * pole_series(q, g, 2, 2)
    };
    if q < SMALL_Q {
        continue_even(q, exact)
    } else {
        exact(q)
    }
}

/// ∫₀^∞ cos(qr) f(r) dr, even in q.
pub fn cosine_moment(q: f64, g: Geometry) -> f64 {
    let exact = |q: f64| {
        let a = g.diffuseness;
        let (csch, _) = hyperbolic_factors(q, a);
        csch * math::sin(q * g.radius) + a * pole_series(q, g, 1, 1)
    };
    if q < SMALL_Q {
        continue_even(q, exact)
    } else {
        exact(q)
    }
}

/// Transform of the real volume term −V_r f(r; R_v, a_v).
pub fn ft_volume_ws(q: f64, p: &OpticalPotentialParams) -> Result<f64> {
    let q = check_q(q)?;
    Ok(-p.v_r * sine_moment_over_q(q, p.volume_geometry()) / (2.0 * PI * PI))
}

/// Transform of the absorptive volume term −W_v f(r; R_s, a_s).
pub fn ft_absorptive_volume(q: f64, p: &OpticalPotentialParams) -> Result<f64> {
    let q = check_q(q)?;
    Ok(-p.w_v * sine_moment_over_q(q, p.surface_geometry()) / (2.0 * PI * PI))
}

/// Transform of the surface term 4a_s W_s f'(r; R_s, a_s).
pub fn ft_surface(q: f64, p: &OpticalPotentialParams) -> Result<f64> {
    let q = check_q(q)?;
    let g = p.surface_geometry();
    Ok(4.0 * g.diffuseness * p.w_s * derivative_moment_over_q(q, g) / (2.0 * PI * PI))
}

/// Transform of the spin-orbit radial factor 2(V_so + iW_so) f'(r)/r.
pub fn ft_spin_orbit(q: f64, p: &OpticalPotentialParams) -> Result<Complex64> {
    let q = check_q(q)?;
    let moment = cosine_moment(q, p.spin_orbit_geometry());
    Ok(-Complex64::new(p.v_so, p.w_so) * moment / (PI * PI))
}

/// Converts a closed-form-normalization value to ∫d³r e^{iq·r} V(r).
pub fn to_plain_transform(value: f64) -> f64 {
    value / TRANSFORM_NORMALIZATION
}

/// Literal two-pole transcriptions of the truncated closed forms, including
/// the flipped sign on the surface pole terms. Kept for comparison with the
/// converged forms above; valid for q > 0 only.
pub mod literal {
    use super::*;

    fn parts(q: f64, g: Geometry) -> (f64, f64, f64) {
        let s = PI * g.diffuseness * q;
        let x = math::exp(-s);
        (
            x,
            -math::expm1(-2.0 * s),
            math::exp(-g.radius / g.diffuseness),
        )
    }

    pub fn volume_ws(q: f64, p: &OpticalPotentialParams) -> Result<f64> {
        let q = check_q(q)?;
        let g = p.volume_geometry();
        let (a, r) = (g.diffuseness, g.radius);
        let (x, d, e) = parts(q, g);
        let aq2 = a * a * q * q;
        let oscillating = PI * a * x / (q * d * d)
            * (r * d * math::cos(q * r) - PI * a * (1.0 + x * x) * math::sin(q * r));
        let poles = a
            * a
            * a
            * e
            * (1.0 / ((1.0 + aq2) * (1.0 + aq2)) - 2.0 * e / ((4.0 + aq2) * (4.0 + aq2)));
        Ok(p.v_r / (PI * PI) * (oscillating - poles))
    }

    pub fn surface(q: f64, p: &OpticalPotentialParams) -> Result<f64> {
        let q = check_q(q)?;
        let g = p.surface_geometry();
        let (a, r) = (g.diffuseness, g.radius);
        let (x, d, e) = parts(q, g);
        let aq2 = a * a * q * q;
        let oscillating = PI * a * x / (d * d)
            * ((PI * a * (1.0 + x * x) - d / q) * math::cos(q * r) + r * d * math::sin(q * r));
        let poles =
            a * a * e * (1.0 / ((1.0 + aq2) * (1.0 + aq2)) - 4.0 * e / ((4.0 + aq2) * (4.0 + aq2)));
        Ok(-4.0 * a * p.w_s / (PI * PI) * (oscillating + poles))
    }

    pub fn spin_orbit(q: f64, p: &OpticalPotentialParams) -> Result<Complex64> {
        let q = check_q(q)?;
        let g = p.spin_orbit_geometry();
        let (a, r) = (g.diffuseness, g.radius);
        let (x, d, e) = parts(q, g);
        let aq2 = a * a * q * q;
        let braces =
            2.0 * PI * x / d * math::sin(q * r) + e * (1.0 / (1.0 + aq2) - 2.0 * e / (4.0 + aq2));
        Ok(-Complex64::new(p.v_so, p.w_so) * (a / (PI * PI) * braces))
    }
}
