//! Brute-force numerical references used to validate the closed forms.
//!
//! Each routine here goes through quadrature of a defining integral and never
//! calls the recurrences, series or closed-form transforms it is meant to
//! check. They are slow and exist for tests and the `validate` report.

use core::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::constants::EULER_GAMMA;
use crate::math;
use crate::quadrature::{integrate, Tolerance};
use crate::Result;

fn tight() -> Tolerance {
    Tolerance {
        absolute: 1e-15,
        relative: 1e-14,
        max_segments: 20_000,
    }
}

/// J_n(z) = (1/π)∫₀^π cos(nτ − z sin τ) dτ.
pub fn bessel_j(n: i64, z: f64) -> Result<f64> {
    let n = n as f64;
    let est = integrate(|t| math::cos(n * t - z * math::sin(t)), 0.0, PI, tight())?;
    Ok(est.value / PI)
}

/// n-th Fourier coefficient of exp{i[a sin τ + b sin(mτ − φ)]}, i.e.
/// (1/2π)∫₀^{2π} exp{i[a sin τ + b sin(mτ − φ)]} e^{−inτ} dτ, by the
/// trapezoid rule (exponentially convergent for periodic analytic integrands).
///
/// This generating function reproduces Σ_λ J_{n−mλ}(a) J_λ(b) e^{−iλφ}; the
/// variant with sin(mτ + φ) yields the same sum at −φ.
pub fn fourier_coefficient(n: i64, a: f64, b: f64, m: u32, phase: f64) -> Complex64 {
    let bandwidth = math::abs(a) + m as f64 * math::abs(b) + math::abs(n as f64);
    let nodes = (4.0 * bandwidth + 256.0) as usize;
    let h = TAU / nodes as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..nodes {
        let t = k as f64 * h;
        let arg = a * math::sin(t) + b * math::sin(m as f64 * t - phase) - n as f64 * t;
        let (s, c) = math::sin_cos(arg);
        acc += Complex64::new(c, s);
    }
    acc / nodes as f64
}

/// Si(x) = ∫₀ˣ sin t / t dt.
pub fn sine_integral(x: f64) -> Result<f64> {
    let est = integrate(
        |t| if t == 0.0 { 1.0 } else { math::sin(t) / t },
        0.0,
        x,
        tight(),
    )?;
    Ok(est.value)
}

/// Ci(x) = γ + ln x + ∫₀ˣ (cos t − 1)/t dt, the finite-range form of
/// −∫ₓ^∞ cos t / t dt.
pub fn cosine_integral(x: f64) -> Result<f64> {
    let est = integrate(
        |t| {
            if t == 0.0 {
                0.0
            } else {
                (math::cos(t) - 1.0) / t
            }
        },
        0.0,
        x,
        tight(),
    )?;
    Ok(EULER_GAMMA + math::ln(x) + est.value)
}

/// (4π/q)∫₀^{r_max} r sin(qr) V(r) dr, the transform ∫d³r e^{iq·r} V(r) of a
/// spherical potential truncated at `r_max`.
pub fn radial_transform<F: Fn(f64) -> f64>(potential: F, q: f64, r_max: f64) -> Result<f64> {
    let tol = Tolerance {
        absolute: 1e-13,
        relative: 1e-13,
        max_segments: 20_000,
    };
    let est = integrate(|r| r * math::sin(q * r) * potential(r), 0.0, r_max, tol)?;
    Ok(4.0 * PI / q * est.value)
}
