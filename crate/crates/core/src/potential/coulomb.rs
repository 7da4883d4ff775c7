//! Momentum-space Coulomb term of the uniformly charged sphere.

use core::f64::consts::PI;

use num_complex::Complex64;

use super::params::OpticalPotentialParams;
use super::shape::coulomb_r;
use crate::constants::TRANSFORM_NORMALIZATION;
use crate::math;
use crate::quadrature::{integrate, kronrod21, Tolerance};
use crate::special::{cosine_integral, sine_integral};
use crate::{Error, Result};

/// Shortest screening length, in units of 1/q, before extrapolating to no
/// screening. The screened tail depends on Λ only through 1/(qΛ).
pub const BASE_SCREENING_PERIODS: f64 = 20.0;
const SCREENING_LEVELS: usize = 5;

fn check_positive_q(q: f64) -> Result<f64> {
    if !q.is_finite() || q <= 0.0 {
        return Err(Error::Domain {
            what: "Coulomb transform requires q > 0",
            value: q,
        });
    }
    Ok(q)
}

/// Closed form with the fixed length scale 2^{2/3}3^{1/3} and the
/// iπ|q|/(2q), log q − log|q| terms kept unchanged. It does not depend on
/// R_c and is retained for comparison only.
pub fn ft_coulomb(q: f64, p: &OpticalPotentialParams) -> Result<Complex64> {
    let q = check_positive_q(q)?;
    let k = p.coulomb_strength();
    let c3 = math::cbrt(3.0);
    let c2 = math::cbrt(2.0);
    let scale = c2 * c2 * c3;
    let x = scale * q;
    let (s, c) = math::sin_cos(x);
    let algebraic = k / (math::powf(2.0, 5.0 / 6.0) * math::sqrt(PI) * q * q * q)
        * (-2.0 * c3 * q * c + c2 * (1.0 + 2.0 * c2 * c3 * c3 * q * q) * s);
    let bracket = Complex64::new(
        -cosine_integral(x)? + math::ln(q) - math::ln(math::abs(q)),
        PI * math::abs(q) / (2.0 * q) - sine_integral(x)?,
    );
    Ok(algebraic + bracket * (3.0 * k * math::sqrt(2.0 / PI)))
}

/// 3(sin x − x cos x)/x³
pub fn sphere_form_factor(x: f64) -> f64 {
    if math::abs(x) < 1e-2 {
        let x2 = x * x;
        1.0 - x2 / 10.0 + x2 * x2 / 280.0
    } else {
        let (s, c) = math::sin_cos(x);
        3.0 * (s - x * c) / (x * x * x)
    }
}

/// Exact transform of the uniform-sphere potential, 4πZ_pZ_te²F(qR_c)/q², in
/// the closed-form normalization.
pub fn ft_coulomb_sphere(q: f64, p: &OpticalPotentialParams) -> Result<f64> {
    let q = check_positive_q(q)?;
    let plain =
        4.0 * PI * p.coulomb_strength() * sphere_form_factor(q * p.coulomb_radius()) / (q * q);
    Ok(TRANSFORM_NORMALIZATION * plain)
}

/// Numerical transform: the interior sphere potential by adaptive
/// quadrature plus the 1/r tail screened as e^{−(r−R_c)/Λ}, evaluated for
/// Λ = Λ₀·2^k (k = 0..4, Λ₀ = 20/q) and extrapolated polynomially in 1/Λ to
/// Λ → ∞.
///
/// Outside R_c the integrand r·V(r) is constant, so over successive periods
/// P = 2π/q the screened tail repeats scaled by ρ = e^{−P/Λ}: one K21 panel
/// times the geometric sum 1/(1 − ρ) covers the whole range.
pub fn ft_coulomb_numeric(q: f64, p: &OpticalPotentialParams) -> Result<f64> {
    let q = check_positive_q(q)?;
    let k = p.coulomb_strength();
    if k == 0.0 {
        return Ok(0.0);
    }
    let rc = p.coulomb_radius();
    let tol = Tolerance::new(1e-14 * k, 1e-13);
    let interior = integrate(|r| r * math::sin(q * r) * coulomb_r(r, p), 0.0, rc, tol)?.value;

    let mut eps = [0.0; SCREENING_LEVELS];
    let mut tails = [0.0; SCREENING_LEVELS];
    for level in 0..SCREENING_LEVELS {
        let length = BASE_SCREENING_PERIODS / q * (1 << level) as f64;
        let period = 2.0 * PI / q;
        eps[level] = 1.0 / length;
        let mut f = |r: f64| math::sin(q * r) * math::exp(-(r - rc) / length);
        let (first, _) = kronrod21(&mut f, rc, rc + period);
        tails[level] = first / -math::expm1(-period / length);
    }
    let tail = extrapolate_to_zero(&eps, &mut tails);
    Ok(TRANSFORM_NORMALIZATION * 4.0 * PI / q * (interior + k * tail))
}

/// Neville's scheme for the interpolating polynomial at x = 0.
fn extrapolate_to_zero(x: &[f64], y: &mut [f64]) -> f64 {
    let n = x.len();
    for level in 1..n {
        for i in 0..n - level {
            let j = i + level;
            y[i] = (x[j] * y[i] - x[i] * y[i + 1]) / (x[j] - x[i]);
        }
    }
    y[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numeric_matches_sphere_form_factor() {
        let p = OpticalPotentialParams::default();
        for &q in &[0.1, 0.5, 1.0, 2.0, 5.0] {
            let exact = ft_coulomb_sphere(q, &p).unwrap();
            let numeric = ft_coulomb_numeric(q, &p).unwrap();
            assert!(
                (numeric - exact).abs() < 1e-6 * exact.abs().max(1e-6),
                "q={q}: {numeric} vs {exact}"
            );
        }
    }

    #[test]
    fn small_q_approaches_point_charge() {
        let p = OpticalPotentialParams::default();
        let q = 1e-3;
        let point = TRANSFORM_NORMALIZATION * 4.0 * PI * p.coulomb_strength() / (q * q);
        let v = ft_coulomb_sphere(q, &p).unwrap();
        assert!((v / point - 1.0).abs() < 1e-5);
    }

    #[test]
    fn neutral_projectile_gives_zero() {
        let p = OpticalPotentialParams {
            z_p: 0.0,
            ..Default::default()
        };
        assert_eq!(ft_coulomb_numeric(0.5, &p).unwrap(), 0.0);
        assert_eq!(ft_coulomb_sphere(0.5, &p).unwrap(), 0.0);
        assert_eq!(ft_coulomb(0.5, &p).unwrap(), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn requires_positive_q() {
        let p = OpticalPotentialParams::default();
        assert!(ft_coulomb(0.0, &p).is_err());
        assert!(ft_coulomb_numeric(-0.5, &p).is_err());
    }

    #[test]
    fn form_factor_branches_agree() {
        let below = sphere_form_factor(0.00999999);
        let (s, c) = (libm::sin(0.00999999), libm::cos(0.00999999));
        let direct = 3.0 * (s - 0.00999999 * c) / 0.00999999f64.powi(3);
        assert!((below - direct).abs() < 1e-9);
    }
}
