use core::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use crate::constants::EULER_GAMMA;
use crate::error::ensure_finite;
use crate::math;
use crate::{Error, Result};

// Power series below, continued fraction for E₁(ix) above.
const SERIES_LIMIT: f64 = 2.0;
const MAX_TERMS: usize = 200;

/// Sine integral Si(x) = ∫₀ˣ sin t / t dt. Odd in x.
pub fn sine_integral(x: f64) -> Result<f64> {
    let x = ensure_finite("Si argument must be finite", x)?;
    let t = math::abs(x);
    let si = if t == 0.0 {
        0.0
    } else if t < SERIES_LIMIT {
        series(t).0
    } else {
        continued_fraction(t).0
    };
    Ok(if x < 0.0 { -si } else { si })
}

/// Cosine integral Ci(x) = −∫ₓ^∞ cos t / t dt, defined for x > 0.
pub fn cosine_integral(x: f64) -> Result<f64> {
    let x = ensure_finite("Ci argument must be finite", x)?;
    if x <= 0.0 {
        return Err(Error::Domain {
            what: "Ci requires x > 0",
            value: x,
        });
    }
    Ok(if x < SERIES_LIMIT {
        series(x).1
    } else {
        continued_fraction(x).1
    })
}

/// (Si, Ci) from the ascending series.
fn series(t: f64) -> (f64, f64) {
    let t2 = t * t;
    // Si = Σ (−1)^k t^{2k+1} / ((2k+1)(2k+1)!)
    let mut si = 0.0;
    let mut power = t; // (−1)^k t^{2k+1}/(2k+1)!
                       // Ci − γ − ln t = Σ_{k≥1} (−1)^k t^{2k} / (2k (2k)!)
    let mut ci = 0.0;
    let mut even = 1.0; // (−1)^k t^{2k}/(2k)!
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        let term_s = power / (2.0 * kf + 1.0);
        si += term_s;
        even *= -t2 / ((2.0 * kf + 1.0) * (2.0 * kf + 2.0));
        let term_c = even / (2.0 * kf + 2.0);
        ci += term_c;
        power *= -t2 / ((2.0 * kf + 2.0) * (2.0 * kf + 3.0));
        if math::abs(term_s) < 1e-17 * math::abs(si)
            && math::abs(term_c) < 1e-17 * (1.0 + math::abs(ci))
        {
            break;
        }
    }
    (si, ci + EULER_GAMMA + math::ln(t))
}

/// (Si, Ci) from the Lentz continued fraction for E₁(it).
fn continued_fraction(t: f64) -> (f64, f64) {
    let tiny = 1e-300;
    let mut b = Complex64::new(1.0, t);
    let mut c = Complex64::new(1.0 / tiny, 0.0);
    let mut d = b.inv();
    let mut h = d;
    for i in 2..MAX_TERMS {
        let a = -(((i - 1) * (i - 1)) as f64);
        b += 2.0;
        d = (d * a + b).inv();
        c = b + c.inv() * a;
        let delta = c * d;
        h *= delta;
        if (delta.re - 1.0).abs() + delta.im.abs() < 1e-16 {
            break;
        }
    }
    let (s, co) = math::sin_cos(t);
    let h = Complex64::new(co, -s) * h;
    (FRAC_PI_2 + h.im, -h.re)
}
