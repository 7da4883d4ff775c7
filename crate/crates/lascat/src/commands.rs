//! One function per subcommand, each turning a [`RunConfig`] into a [`Table`].
//! Grid points are evaluated in parallel and collected in grid order.

use lascat_core::constants::{MB_PER_FM2, TRANSFORM_NORMALIZATION};
use lascat_core::cross_section::{
    assemble_phase_scan, assemble_ratio_scan, born_dcs, born_prefactor, inelastic_fraction,
    phase_scan_params, phase_scan_point, ratio_scan_series, table_row, total_cross_section,
    CrossSectionTable, ScatteringSetup,
};
use lascat_core::kinematics::{dressing_arguments_with, LaserField, DIPOLE_WARNING_THRESHOLD};
use lascat_core::potential::CoulombModel;
use lascat_core::special::GeneralizedBessel;
use rayon::prelude::*;

use crate::config::RunConfig;
use crate::error::CliError;
use crate::output::Table;

fn label(n: i64) -> String {
    format!("n={n}")
}

fn annotate(table: &mut Table, config: &RunConfig) {
    let setup = config.setup();
    table.note("kappa", TRANSFORM_NORMALIZATION);
    table.note(
        "born_prefactor_fm2_per_mev2_fm6",
        born_prefactor(setup.beam.projectile_mass),
    );
    table.note("mb_per_fm2", MB_PER_FM2);
    table.note("units", "angles deg, q fm^-1, cross sections mb/sr");
    let a_p = setup.laser.proton_intensity_parameter();
    table.note("proton_intensity_parameter", a_p);
    if setup.laser.needs_dipole_warning() {
        table.note(
            "warning",
            format!("proton intensity parameter {a_p:.3} exceeds {DIPOLE_WARNING_THRESHOLD}; dipole treatment questionable"),
        );
    }
}

/// Elastic Born cross section over the angle grid.
pub fn born(config: &RunConfig) -> Result<Table, CliError> {
    let setup = config.setup();
    let angles = config.scan.angles_deg()?;
    let p = setup.beam.incident_momentum();
    let rows = angles
        .par_iter()
        .map(|&deg| {
            let theta = deg.to_radians();
            let dcs = born_dcs(theta, &setup.beam, &setup.potential, setup.coulomb)?;
            let q = lascat_core::kinematics::momentum_transfer(p, p, theta);
            Ok(vec![deg, q, dcs])
        })
        .collect::<Result<Vec<_>, lascat_core::Error>>()?;
    let mut table = Table::new(
        "born",
        vec!["theta_deg".into(), "q_fm_inv".into(), "dcs_mb_sr".into()],
    );
    annotate(&mut table, config);
    rows.into_iter().for_each(|r| table.push(r));
    Ok(table)
}

/// Dressed cross sections per photon order next to the Born curve.
pub fn dressed(config: &RunConfig) -> Result<Table, CliError> {
    let setup = config.setup();
    let degrees = config.scan.angles_deg()?;
    let orders = &config.scan.orders;
    let rows = degrees
        .par_iter()
        .map(|&deg| table_row(deg.to_radians(), orders, &setup))
        .collect::<Result<Vec<_>, _>>()?;
    let result = CrossSectionTable::from_rows(rows, orders, &setup);

    let mut columns: Vec<String> = vec!["theta_deg".into(), "q_fm_inv".into(), "born_mb_sr".into()];
    for &n in orders {
        columns.push(format!("dcs_mb_sr[{}]", label(n)));
        columns.push(format!("weight[{}]", label(n)));
        columns.push(format!("pf_over_pi[{}]", label(n)));
    }
    let mut table = Table::new("dressed", columns);
    annotate(&mut table, config);
    table.note(
        "max_truncation_residual",
        result.metadata.max_truncation_residual,
    );
    for (i, deg) in degrees.iter().enumerate() {
        let mut row = vec![*deg, result.q_values[i], result.born[i]];
        for n in orders {
            let s = &result.dressed[n];
            row.extend([s.dressed[i], s.ratios[i], s.momentum_ratios[i]]);
        }
        table.push(row);
    }
    Ok(table)
}

/// 1 − |C₀|² for the configured field and for its fundamental alone.
pub fn inelastic(config: &RunConfig) -> Result<Table, CliError> {
    let setup = config.setup();
    let mono = ScatteringSetup {
        laser: LaserField {
            harmonic_intensity: 0.0,
            ..setup.laser
        },
        ..setup
    };
    let angles = config.scan.angles_deg()?;
    let rows = angles
        .par_iter()
        .map(|&deg| {
            let theta = deg.to_radians();
            let (a, b) = dressing_arguments_with(&setup.laser, &setup.beam, theta)?;
            Ok(vec![
                deg,
                a,
                b,
                inelastic_fraction(theta, &setup)?,
                inelastic_fraction(theta, &mono)?,
            ])
        })
        .collect::<Result<Vec<_>, lascat_core::Error>>()?;
    let mut table = Table::new(
        "inelastic",
        vec![
            "theta_deg".into(),
            "a".into(),
            "b".into(),
            "fraction_bichromatic".into(),
            "fraction_monochromatic".into(),
        ],
    );
    annotate(&mut table, config);
    rows.into_iter().for_each(|r| table.push(r));
    Ok(table)
}

/// |C_n(φ̃)| for the configured orders at the fixed scan angle.
pub fn phase_scan(config: &RunConfig) -> Result<Table, CliError> {
    let setup = config.setup();
    let theta = config.scan.theta_deg.to_radians();
    let phases = config.scan.phases()?;
    let orders = &config.scan.orders;
    let params = phase_scan_params(theta, &setup, &phases)?;
    let magnitudes = phases
        .par_iter()
        .map(|&phi| phase_scan_point(&params, orders, phi))
        .collect::<Result<Vec<_>, _>>()?;
    let scan = assemble_phase_scan(theta, &params, orders, &phases, magnitudes);
    let residual = GeneralizedBessel::new(params)?
        .adaptive_spectrum()?
        .residual;

    let units = config.scan.phase_units;
    let mut columns = vec![units.column().to_string()];
    columns.extend(orders.iter().map(|&n| format!("abs_c[{}]", label(n))));
    let mut table = Table::new("phase-scan", columns);
    annotate(&mut table, config);
    table.note("theta_deg", config.scan.theta_deg);
    table.note("a", scan.a);
    table.note("b", scan.b);
    table.note("m", scan.m);
    table.note("truncation_residual", residual);
    for (phi, row) in scan.phases.iter().zip(&scan.magnitudes) {
        let mut out = vec![units.from_radians(*phi)];
        out.extend(row);
        table.push(out);
    }
    Ok(table)
}

/// |C_n(φ̃)| for each configured intensity ratio I/I_m.
pub fn ratio_scan(config: &RunConfig) -> Result<Table, CliError> {
    let setup = config.setup();
    let theta = config.scan.theta_deg.to_radians();
    let phases = config.scan.phases()?;
    let ratios = &config.scan.ratios;
    let n = config.scan.ratio_order;
    let magnitudes = ratios
        .par_iter()
        .map(|&r| ratio_scan_series(theta, n, &setup, r, &phases))
        .collect::<Result<Vec<_>, _>>()?;
    let scan = assemble_ratio_scan(theta, n, ratios, &phases, magnitudes);

    let units = config.scan.phase_units;
    let mut columns = vec![units.column().to_string()];
    columns.extend(
        ratios
            .iter()
            .map(|r| format!("abs_c[{};ratio={r}]", label(n))),
    );
    let mut table = Table::new("ratio-scan", columns);
    annotate(&mut table, config);
    table.note("theta_deg", config.scan.theta_deg);
    for (r, depth) in ratios.iter().zip(&scan.modulation_depths) {
        table.note(&format!("modulation_depth[ratio={r}]"), depth);
    }
    for (i, phi) in scan.phases.iter().enumerate() {
        let mut row = vec![units.from_radians(*phi)];
        row.extend(scan.magnitudes.iter().map(|s| s[i]));
        table.push(row);
    }
    Ok(table)
}

/// Angle-integrated elastic Born cross section.
pub fn total(config: &RunConfig) -> Result<Table, CliError> {
    let setup = config.setup();
    let coulomb = match (config.scan.total_includes_coulomb, setup.coulomb) {
        (false, _) => CoulombModel::Off,
        (true, CoulombModel::Off) => CoulombModel::Numeric,
        (true, model) => model,
    };
    let theta_min = config.scan.total_theta_min_deg;
    if !(theta_min > 0.0 && theta_min < 180.0) {
        return Err(CliError::config(
            "scan.total_theta_min_deg",
            "cutoff must lie in (0, 180)",
        ));
    }
    let t = total_cross_section(
        &setup.beam,
        &setup.potential,
        theta_min.to_radians(),
        coulomb,
    )?;
    let mut table = Table::new(
        "total",
        vec![
            "theta_min_deg".into(),
            "sigma_mb".into(),
            "error_estimate_mb".into(),
        ],
    );
    annotate(&mut table, config);
    table.note("coulomb", format!("{coulomb:?}").to_lowercase());
    table.push(vec![theta_min, t.value, t.error]);
    Ok(table)
}
