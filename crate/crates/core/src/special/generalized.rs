use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

use num_complex::Complex64;

use super::bessel::{significant_order, BesselTable};
use crate::error::ensure_finite;
use crate::math;
use crate::{Error, Result};

/// Spectra whose unitarity residual exceeds this are flagged incomplete.
pub const INCOMPLETE_RESIDUAL: f64 = 1e-6;

/// Arguments of C_n(a, b; φ) = Σ_λ J_{n−mλ}(a) J_λ(b) e^{−iλφ}.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GeneralizedBesselParams {
    /// Fundamental dressing argument.
    pub a: f64,
    /// Harmonic dressing argument.
    pub b: f64,
    /// Harmonic order, at least 2.
    pub m: u32,
    /// Relative phase φ̃ in radians.
    pub phase: f64,
}

impl GeneralizedBesselParams {
    pub fn new(a: f64, b: f64, m: u32, phase: f64) -> Result<Self> {
        let params = Self { a, b, m, phase };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        ensure_finite("dressing argument a must be finite", self.a)?;
        ensure_finite("dressing argument b must be finite", self.b)?;
        ensure_finite("relative phase must be finite", self.phase)?;
        if self.m < 2 {
            return Err(Error::InvalidParameter {
                name: "m",
                reason: "harmonic order must be at least 2",
            });
        }
        Ok(())
    }
}

/// Phase ψ such that C_{−n}(a, b; φ) = (−1)ⁿ C_n(a, b; ψ)*.
///
/// For even m the relation picks up a shift of π, for odd m it is local in φ.
pub fn conjugate_symmetry_phase(m: u32, phase: f64) -> f64 {
    if m.is_multiple_of(2) {
        phase - PI
    } else {
        phase
    }
}

/// Stopping rule for the λ sum.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Truncation {
    /// Tail terms must fall below this fraction of the running sum.
    pub tail_tolerance: f64,
    /// ...for this many consecutive λ on each side.
    pub consecutive: usize,
    /// Hard limit on |λ|.
    pub lambda_cap: u64,
}

impl Default for Truncation {
    fn default() -> Self {
        Self {
            tail_tolerance: 1e-15,
            consecutive: 5,
            lambda_cap: 1_000_000,
        }
    }
}

/// Evaluator holding the Bessel tables for one (a, b) pair so that many
/// orders n can be computed cheaply.
#[derive(Debug, Clone)]
pub struct GeneralizedBessel {
    params: GeneralizedBesselParams,
    fundamental: BesselTable,
    harmonic: BesselTable,
    truncation: Truncation,
    reduced_phase: f64,
}

impl GeneralizedBessel {
    pub fn new(params: GeneralizedBesselParams) -> Result<Self> {
        Self::with_truncation(params, Truncation::default())
    }

    pub fn with_truncation(
        params: GeneralizedBesselParams,
        truncation: Truncation,
    ) -> Result<Self> {
        params.validate()?;
        Ok(Self {
            params,
            fundamental: BesselTable::new(params.a)?,
            harmonic: BesselTable::new(params.b)?,
            truncation,
            reduced_phase: math::rem_euclid(params.phase, TAU),
        })
    }

    pub fn params(&self) -> &GeneralizedBesselParams {
        &self.params
    }

    #[inline]
    fn term(&self, n: i64, lambda: i64) -> Complex64 {
        let m = self.params.m as i64;
        let magnitude = self.fundamental.get(n - m * lambda) * self.harmonic.get(lambda);
        if magnitude == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let (s, c) = math::sin_cos(lambda as f64 * self.reduced_phase);
        Complex64::new(magnitude * c, -magnitude * s)
    }

    /// C_n together with the largest |λ| visited.
    pub fn coefficient_with_extent(&self, n: i64) -> Result<(Complex64, u64)> {
        let m = self.params.m as i64;
        let cap = self.truncation.lambda_cap as i64;
        let a_reach = math::ceil(math::abs(self.params.a)) as i64;
        let b_reach = math::ceil(math::abs(self.params.b)) as i64;

        // Outside [lo, hi] both Bessel factors are past their turning points
        // and decay monotonically, so the tail test is safe there.
        let lo = (-b_reach).min((n - a_reach).div_euclid(m));
        let hi = b_reach.max(-(-(n + a_reach)).div_euclid(m));
        if lo < -cap || hi > cap {
            let partial = (lo.max(-cap)..=hi.min(cap)).map(|l| self.term(n, l)).sum();
            return Err(Error::NonConvergence {
                order: n,
                lambda_cap: self.truncation.lambda_cap,
                partial_sum: partial,
                residual: self.term(n, cap).norm().max(self.term(n, -cap).norm()),
            });
        }

        let mut sum = Complex64::new(0.0, 0.0);
        let mut largest: f64 = 0.0;
        for lambda in lo..=hi {
            let t = self.term(n, lambda);
            largest = largest.max(t.norm());
            sum += t;
        }

        let mut extent = lo.unsigned_abs().max(hi.unsigned_abs());
        for direction in [1_i64, -1] {
            let mut lambda = if direction > 0 { hi } else { lo };
            let mut quiet = 0;
            while quiet < self.truncation.consecutive {
                lambda += direction;
                if lambda.abs() > cap {
                    return Err(Error::NonConvergence {
                        order: n,
                        lambda_cap: self.truncation.lambda_cap,
                        partial_sum: sum,
                        residual: self.term(n, lambda - direction).norm(),
                    });
                }
                let t = self.term(n, lambda);
                let size = t.norm();
                largest = largest.max(size);
                sum += t;
                let reference = sum.norm().max(largest);
                if size <= self.truncation.tail_tolerance * reference {
                    quiet += 1;
                } else {
                    quiet = 0;
                }
            }
            extent = extent.max(lambda.unsigned_abs());
        }
        Ok((sum, extent))
    }

    pub fn coefficient(&self, n: i64) -> Result<Complex64> {
        self.coefficient_with_extent(n).map(|(c, _)| c)
    }

    /// Coefficients for n ∈ [−n_window, n_window].
    pub fn spectrum(&self, n_window: u32) -> Result<DressingSpectrum> {
        if n_window == 0 {
            return Err(Error::InvalidParameter {
                name: "n_window",
                reason: "photon-order window must be at least 1",
            });
        }
        let w = n_window as i64;
        let mut coefficients = Vec::with_capacity(2 * n_window as usize + 1);
        let mut truncation_lambda = 0;
        for n in -w..=w {
            let (c, extent) = self.coefficient_with_extent(n)?;
            truncation_lambda = truncation_lambda.max(extent);
            coefficients.push(c);
        }
        let weight: f64 = coefficients.iter().map(|c| c.norm_sqr()).sum();
        Ok(DressingSpectrum {
            params: self.params,
            n_window,
            coefficients,
            truncation_lambda,
            residual: 1.0 - weight,
        })
    }

    /// Spectrum over a window wide enough to hold every significant order.
    pub fn adaptive_spectrum(&self) -> Result<DressingSpectrum> {
        self.spectrum(adaptive_window(&self.params))
    }
}

/// Photon-order window beyond which every |C_n| is negligible.
pub fn adaptive_window(params: &GeneralizedBesselParams) -> u32 {
    let reach = math::abs(params.a) + params.m as f64 * math::abs(params.b);
    (significant_order(reach).max(1)) as u32
}

/// C_n(a, b; φ) for one order; see [`GeneralizedBessel`] for repeated use.
pub fn generalized_bessel(n: i64, params: &GeneralizedBesselParams) -> Result<Complex64> {
    GeneralizedBessel::new(*params)?.coefficient(n)
}

/// Coefficients C_n over a symmetric photon-order window.
pub fn dressing_spectrum(
    params: &GeneralizedBesselParams,
    n_window: u32,
) -> Result<DressingSpectrum> {
    GeneralizedBessel::new(*params)?.spectrum(n_window)
}

/// C_n over n ∈ [−window, window] with convergence diagnostics.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DressingSpectrum {
    pub params: GeneralizedBesselParams,
    pub n_window: u32,
    coefficients: Vec<Complex64>,
    /// Largest |λ| used in any of the sums.
    pub truncation_lambda: u64,
    /// 1 − Σ|C_n|² over the window.
    pub residual: f64,
}

impl DressingSpectrum {
    pub fn get(&self, n: i64) -> Option<Complex64> {
        let idx = n + self.n_window as i64;
        usize::try_from(idx)
            .ok()
            .and_then(|i| self.coefficients.get(i).copied())
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        let w = self.n_window as i64;
        self.coefficients
            .iter()
            .enumerate()
            .map(move |(i, &c)| (i as i64 - w, c))
    }

    pub fn is_complete(&self) -> bool {
        self.residual.abs() <= INCOMPLETE_RESIDUAL
    }

    pub fn total_weight(&self) -> f64 {
        1.0 - self.residual
    }
}
