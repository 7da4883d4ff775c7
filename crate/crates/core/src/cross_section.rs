//! Born and laser-dressed differential cross sections, inelastic fractions,
//! phase and intensity-ratio scans, and the angle-integrated elastic total.
//!
//! Every scan is built from pure per-point functions (`*_point`, [`table_row`])
//! so that callers can evaluate grid points in any order or in parallel and
//! assemble the result deterministically.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::constants::{HBAR_C, MB_PER_FM2, TRANSFORM_NORMALIZATION};
use crate::kinematics::{dressing_arguments_with, momentum_transfer, Beam, Kinematics, LaserField};
use crate::math;
use crate::potential::{potential_q, CoulombModel, OpticalPotentialParams};
use crate::quadrature::{self, Tolerance};
use crate::special::{bessel_j, GeneralizedBessel, GeneralizedBesselParams};
use crate::{Error, Result};

/// Absolute tolerance of the angle integration (mb).
pub const TOTAL_ABSOLUTE_TOLERANCE: f64 = 1e-3;

/// Default forward cutoff of the angle integration (rad).
pub const DEFAULT_THETA_MIN: f64 = PI / 180.0;

/// Scattering angle used by phase scans unless told otherwise (rad).
pub const DEFAULT_PHASE_SCAN_THETA: f64 = 7.0 * PI / 180.0;

// Degree-to-radian conversion may land one ulp above π.
const THETA_SLACK: f64 = 1e-12;

/// Everything a cross-section evaluation depends on.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default, deny_unknown_fields))]
pub struct ScatteringSetup {
    pub beam: Beam,
    pub laser: LaserField,
    pub potential: OpticalPotentialParams,
    pub coulomb: CoulombModel,
}

impl ScatteringSetup {
    pub fn validate(&self) -> Result<()> {
        self.beam.validate()?;
        self.laser.validate()?;
        self.potential.validate()
    }

    /// Dressing-function parameters at angle `theta`.
    pub fn dressing_params(&self, theta: f64) -> Result<GeneralizedBesselParams> {
        let (a, b) = dressing_arguments_with(&self.laser, &self.beam, theta)?;
        GeneralizedBesselParams::new(a, b, self.laser.harmonic, self.laser.phase)
    }
}

/// (mc²/(2π(ħc)²))², mapping |∫d³r e^{iq·r}U|² in (MeV·fm³)² to fm².
pub fn born_prefactor(projectile_mass: f64) -> f64 {
    let c = projectile_mass / (2.0 * PI * HBAR_C * HBAR_C);
    c * c
}

fn check_angle(theta: f64) -> Result<f64> {
    if !(theta > 0.0 && theta <= PI + THETA_SLACK) {
        return Err(Error::Domain {
            what: "scattering angle must lie in (0, π]",
            value: theta,
        });
    }
    Ok(theta.min(PI))
}

/// First Born cross section at momentum transfer `q` (mb/sr).
pub fn born_dcs_at_q(
    q: f64,
    beam: &Beam,
    potential: &OpticalPotentialParams,
    coulomb: CoulombModel,
) -> Result<f64> {
    let u = potential_q(q, potential, coulomb)?.plain_total();
    Ok(born_prefactor(beam.projectile_mass) * u.norm_sqr() * MB_PER_FM2)
}

/// Elastic Born cross section dσ_B/dΩ at angle `theta` (mb/sr).
pub fn born_dcs(
    theta: f64,
    beam: &Beam,
    potential: &OpticalPotentialParams,
    coulomb: CoulombModel,
) -> Result<f64> {
    let theta = check_angle(theta)?;
    beam.validate()?;
    let p = beam.incident_momentum();
    born_dcs_at_q(momentum_transfer(p, p, theta), beam, potential, coulomb)
}

/// Dressing amplitude C_n at one angle. With no harmonic this is J_n(a)
/// straight from the Bessel routine.
fn dressing_coefficient(
    params: &GeneralizedBesselParams,
    monochromatic: bool,
    n: i64,
) -> Result<Complex64> {
    if monochromatic {
        Ok(Complex64::new(bessel_j(n, params.a)?, 0.0))
    } else {
        GeneralizedBessel::new(*params)?.coefficient(n)
    }
}

/// One channel of the dressed cross section with all of its factors.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DressedPoint {
    pub theta: f64,
    pub n: i64,
    /// Momentum transfer of this channel (fm⁻¹).
    pub q: f64,
    pub a: f64,
    pub b: f64,
    pub coefficient: Complex64,
    /// |C_n|²
    pub weight: f64,
    /// p_f/p_i
    pub momentum_ratio: f64,
    /// Born cross section at this channel's q (mb/sr).
    pub born: f64,
    /// (p_f/p_i)·born·|C_n|² (mb/sr).
    pub dressed: f64,
}

/// Dressed cross section for net photon order `n` at `theta`.
pub fn dressed_point(theta: f64, n: i64, setup: &ScatteringSetup) -> Result<DressedPoint> {
    let theta = check_angle(theta)?;
    setup.validate()?;
    let params = setup.dressing_params(theta)?;
    let kin = Kinematics::new(&setup.beam, setup.laser.photon_energy_ev(), n, theta)?;
    let coefficient = dressing_coefficient(&params, setup.laser.is_monochromatic(), n)?;
    let weight = coefficient.norm_sqr();
    let momentum_ratio = kin.momentum_ratio();
    let born = born_dcs_at_q(kin.q, &setup.beam, &setup.potential, setup.coulomb)?;
    Ok(DressedPoint {
        theta,
        n,
        q: kin.q,
        a: params.a,
        b: params.b,
        coefficient,
        weight,
        momentum_ratio,
        born,
        dressed: momentum_ratio * born * weight,
    })
}

/// (p_f/p_i)·dσ_B/dΩ·|C_n(a, b_m; φ̃)|² (mb/sr).
pub fn dressed_dcs(theta: f64, n: i64, setup: &ScatteringSetup) -> Result<f64> {
    dressed_point(theta, n, setup).map(|p| p.dressed)
}

/// Probability 1 − |C₀|² that at least one photon is exchanged.
pub fn inelastic_fraction(theta: f64, setup: &ScatteringSetup) -> Result<f64> {
    if theta == 0.0 {
        return Ok(0.0);
    }
    let theta = check_angle(theta)?;
    setup.laser.validate()?;
    let params = setup.dressing_params(theta)?;
    let c0 = dressing_coefficient(&params, setup.laser.is_monochromatic(), 0)?;
    Ok((1.0 - c0.norm_sqr()).clamp(0.0, 1.0))
}

/// Result of [`total_cross_section`].
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TotalCrossSection {
    /// mb
    pub value: f64,
    /// Quadrature error estimate (mb).
    pub error: f64,
    pub theta_min: f64,
    pub segments: usize,
}

/// 2π∫_{θ_min}^{π} dσ_B/dΩ sin θ dθ (mb).
///
/// Pass [`CoulombModel::Off`] for the nuclear-only total; any Coulomb model
/// makes the result depend strongly on `theta_min`.
pub fn total_cross_section(
    beam: &Beam,
    potential: &OpticalPotentialParams,
    theta_min: f64,
    coulomb: CoulombModel,
) -> Result<TotalCrossSection> {
    if !(theta_min > 0.0 && theta_min < PI) {
        return Err(Error::Domain {
            what: "forward cutoff must lie in (0, π)",
            value: theta_min,
        });
    }
    beam.validate()?;
    potential.validate()?;
    let p = beam.incident_momentum();
    let mut failure = None;
    let integrand = |theta: f64| match born_dcs_at_q(
        momentum_transfer(p, p, theta),
        beam,
        potential,
        coulomb,
    ) {
        Ok(dcs) => TAU * dcs * math::sin(theta),
        Err(e) => {
            failure.get_or_insert(e);
            0.0
        }
    };
    let estimate = quadrature::integrate(
        integrand,
        theta_min,
        PI,
        Tolerance::new(TOTAL_ABSOLUTE_TOLERANCE, 0.0),
    )?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(TotalCrossSection {
        value: estimate.value,
        error: estimate.error,
        theta_min,
        segments: estimate.segments,
    })
}

/// |C_n(φ̃)| for several orders at fixed angle, one row per phase.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PhaseScan {
    pub theta: f64,
    pub a: f64,
    pub b: f64,
    pub m: u32,
    pub orders: Vec<i64>,
    pub phases: Vec<f64>,
    /// `magnitudes[i][j]` is |C_{orders[j]}| at `phases[i]`.
    pub magnitudes: Vec<Vec<f64>>,
}

impl PhaseScan {
    /// Series for one order, in phase-grid order.
    pub fn series(&self, n: i64) -> Option<Vec<f64>> {
        let j = self.orders.iter().position(|&o| o == n)?;
        Some(self.magnitudes.iter().map(|row| row[j]).collect())
    }
}

fn check_phase_grid(phases: &[f64]) -> Result<()> {
    for &p in phases {
        if !(p.is_finite() && (-THETA_SLACK..=TAU + THETA_SLACK).contains(&p)) {
            return Err(Error::Domain {
                what: "phase grid must lie within [0, 2π]",
                value: p,
            });
        }
    }
    Ok(())
}

/// |C_n| at one phase for every order in `orders`.
pub fn phase_scan_point(
    params: &GeneralizedBesselParams,
    orders: &[i64],
    phase: f64,
) -> Result<Vec<f64>> {
    let at_phase = GeneralizedBessel::new(GeneralizedBesselParams { phase, ..*params })?;
    orders
        .iter()
        .map(|&n| at_phase.coefficient(n).map(|c| c.norm()))
        .collect()
}

/// Assembles a phase scan from per-phase rows already evaluated.
pub fn assemble_phase_scan(
    theta: f64,
    params: &GeneralizedBesselParams,
    orders: &[i64],
    phases: &[f64],
    magnitudes: Vec<Vec<f64>>,
) -> PhaseScan {
    PhaseScan {
        theta,
        a: params.a,
        b: params.b,
        m: params.m,
        orders: orders.to_vec(),
        phases: phases.to_vec(),
        magnitudes,
    }
}

/// Dressing parameters of a phase scan at `theta`, after checking the grid.
pub fn phase_scan_params(
    theta: f64,
    setup: &ScatteringSetup,
    phases: &[f64],
) -> Result<GeneralizedBesselParams> {
    check_phase_grid(phases)?;
    let theta = check_angle(theta)?;
    setup.laser.validate()?;
    setup.dressing_params(theta)
}

/// |C_n(a(θ), b_m(θ); φ̃)| over `phases` for each order in `orders`.
pub fn phase_scan(
    theta: f64,
    orders: &[i64],
    setup: &ScatteringSetup,
    phases: &[f64],
) -> Result<PhaseScan> {
    let params = phase_scan_params(theta, setup, phases)?;
    let magnitudes = phases
        .iter()
        .map(|&phi| phase_scan_point(&params, orders, phi))
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble_phase_scan(
        theta, &params, orders, phases, magnitudes,
    ))
}

/// max − min of a series; zero for an empty one.
pub fn modulation_depth(series: &[f64]) -> f64 {
    if series.is_empty() {
        return 0.0;
    }
    let (lo, hi) = series
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    hi - lo
}

/// |C_n(φ̃)| for several fundamental-to-harmonic intensity ratios I/I_m.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RatioScan {
    pub theta: f64,
    pub n: i64,
    pub ratios: Vec<f64>,
    pub phases: Vec<f64>,
    /// `magnitudes[k][i]` is |C_n| for `ratios[k]` at `phases[i]`.
    pub magnitudes: Vec<Vec<f64>>,
    /// Per-ratio max − min over the phase grid.
    pub modulation_depths: Vec<f64>,
}

/// Laser of `base` with the harmonic set to I/`ratio`; an infinite ratio
/// switches the harmonic off.
pub fn laser_with_ratio(base: &LaserField, ratio: f64) -> Result<LaserField> {
    if !(ratio > 0.0) {
        return Err(Error::Domain {
            what: "intensity ratio must be positive",
            value: ratio,
        });
    }
    Ok(LaserField {
        harmonic_intensity: base.intensity / ratio,
        ..*base
    })
}

/// |C_n| over `phases` at one intensity ratio.
pub fn ratio_scan_series(
    theta: f64,
    n: i64,
    setup: &ScatteringSetup,
    ratio: f64,
    phases: &[f64],
) -> Result<Vec<f64>> {
    let laser = laser_with_ratio(&setup.laser, ratio)?;
    let setup = ScatteringSetup { laser, ..*setup };
    let params = phase_scan_params(theta, &setup, phases)?;
    phases
        .iter()
        .map(|&phi| phase_scan_point(&params, &[n], phi).map(|v| v[0]))
        .collect()
}

/// Assembles a ratio scan from per-ratio series already evaluated.
pub fn assemble_ratio_scan(
    theta: f64,
    n: i64,
    ratios: &[f64],
    phases: &[f64],
    magnitudes: Vec<Vec<f64>>,
) -> RatioScan {
    let modulation_depths = magnitudes.iter().map(|s| modulation_depth(s)).collect();
    RatioScan {
        theta,
        n,
        ratios: ratios.to_vec(),
        phases: phases.to_vec(),
        magnitudes,
        modulation_depths,
    }
}

/// |C_n(φ̃)| for each I/I_m in `ratios`, with I held at the setup's value.
pub fn ratio_scan(
    theta: f64,
    n: i64,
    setup: &ScatteringSetup,
    ratios: &[f64],
    phases: &[f64],
) -> Result<RatioScan> {
    let magnitudes = ratios
        .iter()
        .map(|&r| ratio_scan_series(theta, n, setup, r, phases))
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble_ratio_scan(theta, n, ratios, phases, magnitudes))
}

/// Dressed channel n across the angle grid.
#[derive(Debug, Clone, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DressedSeries {
    /// Born cross section at each angle evaluated at this channel's q (mb/sr).
    pub born_matched: Vec<f64>,
    /// |C_n|² per angle.
    pub ratios: Vec<f64>,
    /// p_f/p_i per angle.
    pub momentum_ratios: Vec<f64>,
    /// mb/sr per angle.
    pub dressed: Vec<f64>,
}

/// Unit chain and normalization constants of a table.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TableMetadata {
    pub setup: ScatteringSetup,
    /// Ratio of the closed-form potentials to the plain transform.
    pub kappa: f64,
    /// (mc²/(2π(ħc)²))² in fm²/(MeV·fm³)².
    pub born_prefactor: f64,
    pub mb_per_fm2: f64,
    /// Largest 1 − Σ_n|C_n|² over the grid, at adaptive photon-order window.
    pub max_truncation_residual: f64,
}

/// Born and dressed cross sections on an angle grid.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CrossSectionTable {
    /// rad
    pub angles: Vec<f64>,
    /// Elastic momentum transfer per angle (fm⁻¹).
    pub q_values: Vec<f64>,
    /// Elastic Born cross section per angle (mb/sr).
    pub born: Vec<f64>,
    pub dressed: BTreeMap<i64, DressedSeries>,
    /// 1 − Σ_n|C_n|² per angle at adaptive window.
    pub residuals: Vec<f64>,
    pub metadata: TableMetadata,
}

/// All quantities of one table angle.
#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub theta: f64,
    pub q: f64,
    pub born: f64,
    pub residual: f64,
    pub channels: Vec<DressedPoint>,
}

/// Evaluates one angle of a [`CrossSectionTable`].
pub fn table_row(theta: f64, orders: &[i64], setup: &ScatteringSetup) -> Result<TableRow> {
    let theta = check_angle(theta)?;
    setup.validate()?;
    let p = setup.beam.incident_momentum();
    let q = momentum_transfer(p, p, theta);
    let born = born_dcs_at_q(q, &setup.beam, &setup.potential, setup.coulomb)?;
    let residual = if orders.is_empty() {
        0.0
    } else {
        GeneralizedBessel::new(setup.dressing_params(theta)?)?
            .adaptive_spectrum()?
            .residual
    };
    let channels = orders
        .iter()
        .map(|&n| dressed_point(theta, n, setup))
        .collect::<Result<Vec<_>>>()?;
    Ok(TableRow {
        theta,
        q,
        born,
        residual,
        channels,
    })
}

impl CrossSectionTable {
    /// Builds a table from rows evaluated in grid order.
    pub fn from_rows(rows: Vec<TableRow>, orders: &[i64], setup: &ScatteringSetup) -> Self {
        let mut dressed: BTreeMap<i64, DressedSeries> = orders
            .iter()
            .map(|&n| (n, DressedSeries::default()))
            .collect();
        let mut table = CrossSectionTable {
            angles: Vec::with_capacity(rows.len()),
            q_values: Vec::with_capacity(rows.len()),
            born: Vec::with_capacity(rows.len()),
            dressed: BTreeMap::new(),
            residuals: Vec::with_capacity(rows.len()),
            metadata: TableMetadata {
                setup: *setup,
                kappa: TRANSFORM_NORMALIZATION,
                born_prefactor: born_prefactor(setup.beam.projectile_mass),
                mb_per_fm2: MB_PER_FM2,
                max_truncation_residual: 0.0,
            },
        };
        for row in rows {
            table.angles.push(row.theta);
            table.q_values.push(row.q);
            table.born.push(row.born);
            table.residuals.push(row.residual);
            table.metadata.max_truncation_residual = table
                .metadata
                .max_truncation_residual
                .max(row.residual.abs());
            for point in row.channels {
                let series = dressed
                    .get_mut(&point.n)
                    .expect("row orders match table orders");
                series.born_matched.push(point.born);
                series.ratios.push(point.weight);
                series.momentum_ratios.push(point.momentum_ratio);
                series.dressed.push(point.dressed);
            }
        }
        table.dressed = dressed;
        table
    }

    /// Serial evaluation over `angles`.
    pub fn compute(angles: &[f64], orders: &[i64], setup: &ScatteringSetup) -> Result<Self> {
        let rows = angles
            .iter()
            .map(|&t| table_row(t, orders, setup))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_rows(rows, orders, setup))
    }
}

/// Evenly spaced grid from `start` to `stop` inclusive with `count` points.
pub fn linspace(start: f64, stop: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => alloc::vec![start],
        _ => {
            let step = (stop - start) / (count - 1) as f64;
            (0..count)
                .map(|i| {
                    if i + 1 == count {
                        stop
                    } else {
                        start + step * i as f64
                    }
                })
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nuclear_setup() -> ScatteringSetup {
        ScatteringSetup {
            coulomb: CoulombModel::Off,
            ..ScatteringSetup::default()
        }
    }

    fn field_free() -> ScatteringSetup {
        ScatteringSetup {
            laser: LaserField {
                intensity: 0.0,
                harmonic_intensity: 0.0,
                ..LaserField::default()
            },
            ..nuclear_setup()
        }
    }

    #[test]
    fn zero_potential_gives_zero() {
        let s = nuclear_setup();
        let zero = s.potential.scaled_strengths(0.0);
        assert_eq!(
            born_dcs(0.3, &s.beam, &zero, CoulombModel::Off).unwrap(),
            0.0
        );
        let total =
            total_cross_section(&s.beam, &zero, DEFAULT_THETA_MIN, CoulombModel::Off).unwrap();
        assert_eq!(total.value, 0.0);
    }

    #[test]
    fn doubling_strengths_quadruples_born() {
        let s = nuclear_setup();
        let doubled = s.potential.scaled_strengths(2.0);
        for theta in [0.05, 0.4, 1.2, 3.0] {
            let base = born_dcs(theta, &s.beam, &s.potential, s.coulomb).unwrap();
            let big = born_dcs(theta, &s.beam, &doubled, s.coulomb).unwrap();
            assert!((big / base - 4.0).abs() < 1e-9, "{theta}: {}", big / base);
        }
    }

    #[test]
    fn halving_volume_quarters_total() {
        let s = nuclear_setup();
        let v = s.potential.volume_only();
        let half = OpticalPotentialParams {
            v_r: 0.5 * v.v_r,
            ..v
        };
        let t1 = total_cross_section(&s.beam, &v, DEFAULT_THETA_MIN, CoulombModel::Off).unwrap();
        let t2 = total_cross_section(&s.beam, &half, DEFAULT_THETA_MIN, CoulombModel::Off).unwrap();
        assert!((t2.value / t1.value - 0.25).abs() < 1e-5);
    }

    #[test]
    fn field_free_elastic_equals_born() {
        let s = field_free();
        for theta in [0.1, 1.0, PI] {
            let born = born_dcs(theta, &s.beam, &s.potential, s.coulomb).unwrap();
            assert_eq!(dressed_dcs(theta, 0, &s).unwrap(), born);
            assert_eq!(dressed_dcs(theta, 1, &s).unwrap(), 0.0);
        }
    }

    #[test]
    fn factorization_holds_exactly() {
        let s = nuclear_setup();
        for n in -3..=3 {
            let p = dressed_point(0.3, n, &s).unwrap();
            assert_eq!(p.dressed, p.momentum_ratio * p.born * p.weight);
            assert_eq!(p.weight, p.coefficient.norm_sqr());
        }
    }

    #[test]
    fn monochromatic_matches_bessel_bit_for_bit() {
        let s = ScatteringSetup {
            laser: LaserField {
                harmonic_intensity: 0.0,
                ..LaserField::default()
            },
            ..nuclear_setup()
        };
        let theta = 0.5;
        let (a, _) = dressing_arguments_with(&s.laser, &s.beam, theta).unwrap();
        for n in -4..=4 {
            let j = bessel_j(n, a).unwrap();
            assert_eq!(dressed_point(theta, n, &s).unwrap().weight, j * j);
        }
        let f = inelastic_fraction(theta, &s).unwrap();
        let j0 = bessel_j(0, a).unwrap();
        assert_eq!(f, (1.0 - j0 * j0).clamp(0.0, 1.0));
    }

    #[test]
    fn channel_sum_recovers_born() {
        let s = nuclear_setup();
        let theta = 40f64.to_radians();
        let born = born_dcs(theta, &s.beam, &s.potential, s.coulomb).unwrap();
        let params = s.dressing_params(theta).unwrap();
        let w = crate::special::adaptive_window(&params) as i64;
        let sum: f64 = (-w..=w)
            .map(|n| {
                let p = dressed_point(theta, n, &s).unwrap();
                p.dressed / p.momentum_ratio * born / p.born
            })
            .sum();
        assert!((sum / born - 1.0).abs() < 1e-10, "{}", sum / born);
    }

    #[test]
    fn inelastic_fraction_bounds() {
        let s = nuclear_setup();
        assert_eq!(inelastic_fraction(0.0, &s).unwrap(), 0.0);
        let small = inelastic_fraction(2f64.to_radians(), &s).unwrap();
        let larger = inelastic_fraction(10f64.to_radians(), &s).unwrap();
        assert!(small > 0.0 && small < larger && larger <= 1.0);
    }

    #[test]
    fn phase_scan_is_periodic_and_flat_without_harmonic() {
        let s = nuclear_setup();
        let scan = phase_scan(DEFAULT_PHASE_SCAN_THETA, &[1, 2, 3], &s, &[0.0, TAU]).unwrap();
        for j in 0..3 {
            assert!((scan.magnitudes[0][j] - scan.magnitudes[1][j]).abs() < 1e-12);
        }
        let phases = linspace(0.0, TAU, 9);
        let flat = ratio_scan(DEFAULT_PHASE_SCAN_THETA, 1, &s, &[f64::INFINITY], &phases).unwrap();
        assert_eq!(flat.modulation_depths[0], 0.0);
        assert!(phase_scan(0.1, &[1], &s, &[-1.0]).is_err());
        assert!(ratio_scan(0.1, 1, &s, &[0.0], &phases).is_err());
    }

    #[test]
    fn table_columns_line_up() {
        let s = nuclear_setup();
        let angles = linspace(2f64.to_radians(), 60f64.to_radians(), 5);
        let table = CrossSectionTable::compute(&angles, &[-1, 0, 1], &s).unwrap();
        assert_eq!(table.q_values.len(), 5);
        assert!(table.q_values.windows(2).all(|w| w[0] < w[1]));
        for series in table.dressed.values() {
            assert_eq!(series.dressed.len(), 5);
            for i in 0..5 {
                assert_eq!(
                    series.dressed[i],
                    series.momentum_ratios[i] * series.born_matched[i] * series.ratios[i]
                );
            }
        }
        assert!(table.metadata.max_truncation_residual < 1e-8);
        assert_eq!(table.metadata.kappa, TRANSFORM_NORMALIZATION);
    }

    #[test]
    fn angle_domain() {
        let s = nuclear_setup();
        assert!(born_dcs(0.0, &s.beam, &s.potential, s.coulomb).is_err());
        assert!(born_dcs(PI + 1e-6, &s.beam, &s.potential, s.coulomb).is_err());
        assert!(born_dcs(180f64.to_radians(), &s.beam, &s.potential, s.coulomb).is_ok());
        assert!(total_cross_section(&s.beam, &s.potential, 0.0, CoulombModel::Off).is_err());
    }

    #[test]
    fn linspace_endpoints() {
        let g = linspace(0.0, TAU, 7);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[6], TAU);
        assert!(linspace(1.0, 2.0, 0).is_empty());
    }
}
