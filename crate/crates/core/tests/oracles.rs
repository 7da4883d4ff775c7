//! Library routines against the independent quadrature oracles.

use lascat_core::constants::TRANSFORM_NORMALIZATION;
use lascat_core::oracle;
use lascat_core::potential::{
    calibrate_normalization, ft_coulomb_numeric, ft_coulomb_sphere, OpticalPotentialParams,
};
use lascat_core::special::{
    bessel_j, cosine_integral, generalized_bessel, sine_integral, GeneralizedBesselParams,
};

#[test]
fn bessel_against_integral_representation() {
    assert!((oracle::bessel_j(5, 7.3).unwrap() - 0.3137061708973091).abs() < 1e-14);
    for n in [0, 1, 4, 12, 33] {
        for z in [0.2, 3.3, 11.0, 28.7] {
            let lib = bessel_j(n, z).unwrap();
            let quad = oracle::bessel_j(n, z).unwrap();
            assert!((lib - quad).abs() < 1e-13, "J_{n}({z}): {lib} vs {quad}");
        }
    }
}

#[test]
fn trig_integrals_against_quadrature() {
    assert!((oracle::cosine_integral(1.0).unwrap() - 0.337403922900968).abs() < 1e-13);
    for x in [0.1, 1.0, 1.9, 2.1, 7.5, 40.0] {
        assert!((sine_integral(x).unwrap() - oracle::sine_integral(x).unwrap()).abs() < 1e-13);
        assert!((cosine_integral(x).unwrap() - oracle::cosine_integral(x).unwrap()).abs() < 1e-13);
    }
}

#[test]
fn generalized_bessel_frozen_value() {
    let p = GeneralizedBesselParams::new(0.8, 0.4, 2, std::f64::consts::FRAC_PI_3).unwrap();
    let c = generalized_bessel(1, &p).unwrap();
    assert!((c.re - 0.3171799041991038).abs() < 1e-15);
    assert!((c.im - 0.0610531123069174).abs() < 1e-15);
    let quad = oracle::fourier_coefficient(1, 0.8, 0.4, 2, std::f64::consts::FRAC_PI_3);
    assert!((c - quad).norm() < 1e-14);
}

#[test]
fn normalization_is_q_independent() {
    let p = OpticalPotentialParams::default();
    for q in [0.1, 0.7, 2.0, 4.5] {
        let k = calibrate_normalization(&p, q).unwrap();
        assert!((k / TRANSFORM_NORMALIZATION - 1.0).abs() < 1e-9, "{q}: {k}");
    }
}

#[test]
fn coulomb_numeric_matches_sphere() {
    let p = OpticalPotentialParams::default();
    for q in [0.2, 1.3, 3.0] {
        let n = ft_coulomb_numeric(q, &p).unwrap();
        let s = ft_coulomb_sphere(q, &p).unwrap();
        assert!((n / s - 1.0).abs() < 1e-6);
    }
}
