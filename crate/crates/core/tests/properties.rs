use std::f64::consts::{PI, TAU};

use lascat_core::cross_section::{dressed_point, inelastic_fraction, ScatteringSetup};
use lascat_core::kinematics::LaserField;
use lascat_core::potential::CoulombModel;
use lascat_core::special::{bessel_j, GeneralizedBessel, GeneralizedBesselParams};
use proptest::prelude::*;

fn setup(intensity: f64, harmonic_intensity: f64, harmonic: u32, phase: f64) -> ScatteringSetup {
    ScatteringSetup {
        laser: LaserField {
            intensity,
            harmonic_intensity,
            harmonic,
            phase,
            ..LaserField::default()
        },
        coulomb: CoulombModel::Off,
        ..ScatteringSetup::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn bessel_parity(n in -60i64..60, z in 0.0f64..80.0) {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        prop_assert_eq!(bessel_j(-n, z).unwrap(), sign * bessel_j(n, z).unwrap());
        prop_assert!(bessel_j(n, z).unwrap().abs() <= 1.0);
    }

    #[test]
    fn bessel_recurrence(n in 1i64..40, z in 0.5f64..60.0) {
        let lhs = bessel_j(n - 1, z).unwrap() + bessel_j(n + 1, z).unwrap();
        let rhs = 2.0 * n as f64 / z * bessel_j(n, z).unwrap();
        prop_assert!((lhs - rhs).abs() < 1e-12 * (1.0 + rhs.abs()));
    }

    #[test]
    fn coefficient_is_bounded_and_periodic(
        a in 0.0f64..25.0, b in 0.0f64..25.0, m in 2u32..5, phase in 0.0f64..TAU, n in -30i64..30,
    ) {
        let c = GeneralizedBessel::new(GeneralizedBesselParams::new(a, b, m, phase).unwrap())
            .unwrap()
            .coefficient(n)
            .unwrap();
        let shifted = GeneralizedBessel::new(GeneralizedBesselParams::new(a, b, m, phase + TAU).unwrap())
            .unwrap()
            .coefficient(n)
            .unwrap();
        prop_assert!(c.norm() <= 1.0 + 1e-12);
        prop_assert!((c - shifted).norm() < 1e-12);
    }

    #[test]
    fn inelastic_fraction_in_unit_interval(
        theta in 0.0f64..PI, i in 0.0f64..1e14, i2 in 0.0f64..1e14, m in 2u32..4, phase in 0.0f64..TAU,
    ) {
        let f = inelastic_fraction(theta, &setup(i, i2, m, phase)).unwrap();
        prop_assert!((0.0..=1.0).contains(&f));
    }

    #[test]
    fn dressed_is_non_negative_and_factorizes(
        theta in 0.01f64..PI, n in -4i64..=4, i in 0.0f64..1e13, ratio in 0.5f64..20.0, phase in 0.0f64..TAU,
    ) {
        let p = dressed_point(theta, n, &setup(i, i / ratio, 2, phase)).unwrap();
        prop_assert!(p.dressed.is_finite() && p.dressed >= 0.0);
        prop_assert_eq!(p.dressed, p.momentum_ratio * p.born * p.weight);
    }

    #[test]
    fn even_harmonic_mirror(
        a in 0.0f64..15.0, b in 0.0f64..15.0, phase in 0.0f64..TAU, n in -12i64..12,
    ) {
        let plus = GeneralizedBessel::new(GeneralizedBesselParams::new(a, b, 2, phase).unwrap()).unwrap();
        let minus = GeneralizedBessel::new(GeneralizedBesselParams::new(a, b, 2, phase - PI).unwrap()).unwrap();
        prop_assert!((plus.coefficient(-n).unwrap().norm() - minus.coefficient(n).unwrap().norm()).abs() < 1e-12);
    }
}
