//! Self-check report: library routines against the independent oracles and
//! the unitarity and symmetry identities, on fixed parameter sets.

use std::f64::consts::{FRAC_PI_3, TAU};

use lascat_core::constants::TRANSFORM_NORMALIZATION;
use lascat_core::cross_section::{dressed_point, ScatteringSetup};
use lascat_core::oracle;
use lascat_core::potential::{calibrate_normalization, CoulombModel, OpticalPotentialParams};
use lascat_core::special::{
    bessel_j, conjugate_symmetry_phase, cosine_integral, sine_integral, GeneralizedBessel,
    GeneralizedBesselParams,
};

use crate::config::RunConfig;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

const DRAWS: [(f64, f64, u32, f64); 6] = [
    (0.0, 0.0, 2, 0.0),
    (0.7454, 0.3727, 2, 1.1),
    (5.5, 12.0, 2, 2.9),
    (19.3, 3.1, 3, FRAC_PI_3),
    (28.0, 27.0, 3, 5.0),
    (12.25, 0.0, 2, 0.4),
];

fn params(d: (f64, f64, u32, f64)) -> lascat_core::Result<GeneralizedBessel> {
    GeneralizedBessel::new(GeneralizedBesselParams::new(d.0, d.1, d.2, d.3)?)
}

fn check(name: &'static str, worst: f64, limit: f64, what: &str) -> Check {
    Check {
        name,
        pass: worst <= limit,
        detail: format!("{what} {worst:.2e} (limit {limit:.0e})"),
    }
}

fn sum_rule() -> lascat_core::Result<Check> {
    let mut worst = 0.0f64;
    for d in DRAWS {
        worst = worst.max(params(d)?.adaptive_spectrum()?.residual.abs());
    }
    Ok(check("sum rule", worst, 1e-10, "max |1 - sum |C_n|^2|"))
}

fn symmetry() -> lascat_core::Result<Check> {
    let mut worst = 0.0f64;
    for d in DRAWS {
        let direct = params(d)?;
        let mirrored = params((d.0, d.1, d.2, conjugate_symmetry_phase(d.2, d.3)))?;
        for n in -10i64..=10 {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let diff = direct.coefficient(-n)? - mirrored.coefficient(n)?.conj() * sign;
            worst = worst.max(diff.norm());
        }
    }
    Ok(check("symmetry", worst, 1e-12, "max |C_-n - (-1)^n C_n*|"))
}

fn fourier_oracle() -> lascat_core::Result<Check> {
    let mut worst = 0.0f64;
    for d in DRAWS.iter().filter(|d| d.0 <= 20.0 && d.1 <= 20.0) {
        let g = params(*d)?;
        for n in -40i64..=40 {
            let quad = oracle::fourier_coefficient(n, d.0, d.1, d.2, d.3);
            worst = worst.max((g.coefficient(n)? - quad).norm());
        }
    }
    Ok(check(
        "generating-function oracle",
        worst,
        1e-8,
        "max |series - quadrature|",
    ))
}

fn bessel() -> lascat_core::Result<Check> {
    let mut worst = 0.0f64;
    for (n, z) in [
        (0, 0.5),
        (1, 2.4),
        (5, 7.3),
        (12, 3.0),
        (30, 29.5),
        (50, 30.0),
    ] {
        worst = worst.max((bessel_j(n, z)? - oracle::bessel_j(n, z)?).abs());
    }
    Ok(check(
        "Bessel J_n vs integral",
        worst,
        1e-13,
        "max abs difference",
    ))
}

fn trig_integrals() -> lascat_core::Result<Check> {
    let mut worst = 0.0f64;
    for x in [0.3, 1.0, 2.5, 9.0, 33.0] {
        worst = worst.max((sine_integral(x)? - oracle::sine_integral(x)?).abs());
        worst = worst.max((cosine_integral(x)? - oracle::cosine_integral(x)?).abs());
    }
    Ok(check(
        "Si/Ci vs quadrature",
        worst,
        1e-13,
        "max abs difference",
    ))
}

fn transforms(potential: &OpticalPotentialParams) -> lascat_core::Result<Check> {
    let reference = calibrate_normalization(potential, 1.0)?;
    let mut worst = 0.0f64;
    for q in [0.1, 0.5, 1.5, 3.0, 5.0] {
        worst = worst.max((calibrate_normalization(potential, q)? / reference - 1.0).abs());
    }
    let mut c = check(
        "transform normalization",
        worst,
        1e-6,
        "max relative drift of kappa over q",
    );
    c.detail.push_str(&format!(
        "; kappa = {reference:.10e}, 1/(2pi)^3 = {TRANSFORM_NORMALIZATION:.10e}"
    ));
    Ok(c)
}

fn factorization(setup: &ScatteringSetup) -> lascat_core::Result<Check> {
    let setup = ScatteringSetup {
        coulomb: CoulombModel::Off,
        ..*setup
    };
    let mut exact = true;
    for deg in [2.0f64, 7.0, 30.0, 90.0] {
        for n in -2..=2 {
            let p = dressed_point(deg.to_radians(), n, &setup)?;
            exact &= p.dressed == p.momentum_ratio * p.born * p.weight;
        }
    }
    Ok(Check {
        name: "dressed/Born factorization",
        pass: exact,
        detail: "dressed == (p_f/p_i) born |C_n|^2 at 20 points".into(),
    })
}

fn periodicity() -> lascat_core::Result<Check> {
    let mut worst = 0.0f64;
    for d in DRAWS {
        let a = params(d)?;
        let b = params((d.0, d.1, d.2, d.3 + TAU))?;
        let c = params((d.0, d.1, d.2, d.3 - 2.0 * TAU))?;
        for n in -5..=5 {
            worst = worst.max((a.coefficient(n)? - b.coefficient(n)?).norm());
            worst = worst.max((a.coefficient(n)? - c.coefficient(n)?).norm());
        }
    }
    Ok(check(
        "phase periodicity",
        worst,
        1e-12,
        "max |C_n(phi) - C_n(phi + 2 pi k)|",
    ))
}

/// Runs every check; a check whose routine errors counts as failed.
pub fn run(config: &RunConfig) -> Vec<Check> {
    let setup = config.setup();
    let results: Vec<(&'static str, lascat_core::Result<Check>)> = vec![
        ("sum rule", sum_rule()),
        ("symmetry", symmetry()),
        ("generating-function oracle", fourier_oracle()),
        ("phase periodicity", periodicity()),
        ("Bessel J_n vs integral", bessel()),
        ("Si/Ci vs quadrature", trig_integrals()),
        ("transform normalization", transforms(&setup.potential)),
        ("dressed/Born factorization", factorization(&setup)),
    ];
    results
        .into_iter()
        .map(|(name, r)| {
            r.unwrap_or_else(|e| Check {
                name,
                pass: false,
                detail: format!("error: {e}"),
            })
        })
        .collect()
}

pub fn report(checks: &[Check]) -> String {
    let mut out = String::new();
    for c in checks {
        let tag = if c.pass { "PASS" } else { "FAIL" };
        out.push_str(&format!("{tag} {}: {}\n", c.name, c.detail));
    }
    let failed = checks.iter().filter(|c| !c.pass).count();
    out.push_str(&format!(
        "{} passed, {failed} failed\n",
        checks.len() - failed
    ));
    out
}
