//! Frozen values. Born cross sections and the total come from an independent
//! radial-quadrature evaluation of the coordinate-space potential; the
//! modulation depths are recorded from this crate and guard against drift.

use std::f64::consts::TAU;

use lascat_core::cross_section::{
    born_dcs, linspace, ratio_scan, total_cross_section, ScatteringSetup, DEFAULT_THETA_MIN,
};
use lascat_core::kinematics::LaserField;
use lascat_core::potential::{CoulombModel, RadiusConvention};

fn rel(a: f64, b: f64) -> f64 {
    (a / b - 1.0).abs()
}

#[test]
fn born_cross_section_nuclear_only() {
    let s = ScatteringSetup::default();
    for (deg, want) in [
        (10.0, 258.7443282268018),
        (30.0, 81.53417987925354),
        (90.0, 0.26039604427951607),
    ] {
        let got = born_dcs(
            f64::to_radians(deg),
            &s.beam,
            &s.potential,
            CoulombModel::Off,
        )
        .unwrap();
        assert!(rel(got, want) < 1e-10, "{deg}: {got} vs {want}");
    }
}

#[test]
fn elastic_total_nuclear_only() {
    let s = ScatteringSetup::default();
    let t =
        total_cross_section(&s.beam, &s.potential, DEFAULT_THETA_MIN, CoulombModel::Off).unwrap();
    assert!((t.value - 202.73876146899593).abs() < 1e-3, "{}", t.value);
}

#[test]
fn reduced_radii_overshoot_the_total() {
    let mut s = ScatteringSetup::default();
    s.potential.radius_convention = RadiusConvention::Reduced;
    let t =
        total_cross_section(&s.beam, &s.potential, DEFAULT_THETA_MIN, CoulombModel::Off).unwrap();
    assert!((t.value - 1920.477035793881).abs() < 1e-2, "{}", t.value);
}

#[test]
fn modulation_depth_by_intensity_ratio() {
    let s = ScatteringSetup {
        laser: LaserField {
            intensity: 1e12,
            harmonic_intensity: 1e12,
            harmonic: 2,
            ..LaserField::default()
        },
        ..ScatteringSetup::default()
    };
    let phases = linspace(0.0, TAU, 361);
    let scan = ratio_scan(7f64.to_radians(), 1, &s, &[1.0, 2.0, 10.0], &phases).unwrap();
    let want = [
        0.13029074086420744,
        0.09293622569026172,
        0.041852488120523446,
    ];
    for (got, want) in scan.modulation_depths.iter().zip(want) {
        assert!((got - want).abs() < 1e-12, "{got} vs {want}");
    }
    assert!((scan.modulation_depths[0] / scan.modulation_depths[2] - 3.113).abs() < 1e-3);
}
