//! Argument parsing and dispatch. Every flag maps onto one configuration key
//! and overrides the value read from `--config`.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use lascat_core::kinematics::ArgumentFormula;
use lascat_core::potential::{CoulombModel, RadiusConvention};

use crate::commands;
use crate::config::{parse_override, Format, PhaseUnits, RunConfig};
use crate::error::CliError;
use crate::output::{write_table, Table};
use crate::validate;

#[derive(Debug, Parser)]
#[command(
    name = "lascat",
    version,
    about = "Laser-assisted proton-nucleus Born scattering"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Elastic Born cross section over the angle grid.
    Born(Options),
    /// Laser-dressed cross sections per photon order.
    Dressed(Options),
    /// Probability of exchanging at least one photon, two-colour and fundamental only.
    Inelastic(Options),
    /// |C_n| versus relative phase at a fixed angle.
    PhaseScan(Options),
    /// |C_n| versus relative phase for several intensity ratios.
    RatioScan(Options),
    /// Angle-integrated elastic cross section.
    Total(Options),
    /// Oracle comparisons and identity checks.
    Validate(Options),
}

impl Command {
    pub fn options(&self) -> &Options {
        match self {
            Command::Born(o)
            | Command::Dressed(o)
            | Command::Inelastic(o)
            | Command::PhaseScan(o)
            | Command::RatioScan(o)
            | Command::Total(o)
            | Command::Validate(o) => o,
        }
    }
}

#[derive(Debug, Clone, Default, Args)]
pub struct Options {
    /// TOML configuration file.
    #[arg(long, short)]
    pub config: Option<PathBuf>,
    /// Override any configuration key, e.g. `--set laser.intensity=2e12`.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    pub set: Vec<String>,
    /// Output file (standard output by default).
    #[arg(long, short)]
    pub output: Option<String>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Unit of `--phase` and of phase columns.
    #[arg(long, value_enum)]
    pub phase_units: Option<PhaseUnits>,

    /// Laboratory kinetic energy (MeV).
    #[arg(long, allow_negative_numbers = true)]
    pub energy: Option<f64>,
    /// Fundamental wavelength (μm).
    #[arg(long, allow_negative_numbers = true)]
    pub wavelength: Option<f64>,
    /// Fundamental intensity (W/cm²).
    #[arg(long, allow_negative_numbers = true)]
    pub intensity: Option<f64>,
    /// Harmonic intensity (W/cm²).
    #[arg(long, allow_negative_numbers = true)]
    pub harmonic_intensity: Option<f64>,
    /// Harmonic order m.
    #[arg(long)]
    pub harmonic: Option<u32>,
    /// Relative phase, in `--phase-units`.
    #[arg(long, allow_negative_numbers = true)]
    pub phase: Option<f64>,
    #[arg(long, value_enum)]
    pub argument_formula: Option<FormulaArg>,
    #[arg(long, value_enum)]
    pub radius_convention: Option<RadiusArg>,
    #[arg(long, value_enum)]
    pub coulomb: Option<CoulombArg>,

    /// Smallest scattering angle of the grid (deg).
    #[arg(long, allow_negative_numbers = true)]
    pub theta_min: Option<f64>,
    /// Largest scattering angle of the grid (deg).
    #[arg(long, allow_negative_numbers = true)]
    pub theta_max: Option<f64>,
    /// Angle grid spacing (deg).
    #[arg(long, allow_negative_numbers = true)]
    pub theta_step: Option<f64>,
    /// Fixed angle of phase and ratio scans (deg).
    #[arg(long, allow_negative_numbers = true)]
    pub theta: Option<f64>,
    /// Photon orders, comma separated.
    #[arg(long = "n", value_delimiter = ',', allow_hyphen_values = true)]
    pub orders: Vec<i64>,
    /// Intensity ratios I/I_m, comma separated.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub ratios: Vec<f64>,
    /// Photon order of the ratio scan.
    #[arg(long, allow_negative_numbers = true)]
    pub ratio_order: Option<i64>,
    /// Points on the phase grid over [0, 2π].
    #[arg(long)]
    pub phase_points: Option<usize>,
    /// Forward cutoff of `total` (deg).
    #[arg(long, allow_negative_numbers = true)]
    pub total_theta_min: Option<f64>,
    /// Include the Coulomb term in `total`.
    #[arg(long)]
    pub include_coulomb: bool,
}

#[derive(Debug, Clone, Copy, clap::ValueEnum)]
pub enum FormulaArg {
    Exact,
    Simplified,
}

#[derive(Debug, Clone, Copy, clap::ValueEnum)]
pub enum RadiusArg {
    Absolute,
    Reduced,
}

#[derive(Debug, Clone, Copy, clap::ValueEnum)]
pub enum CoulombArg {
    Numeric,
    SphereFormFactor,
    Literal,
    Off,
}

fn enum_value<T: serde::Serialize>(v: T) -> toml::Value {
    toml::Value::try_from(v).expect("unit variants serialize as strings")
}

impl Options {
    /// Flag values as (dotted key, value) overrides; `--set` entries first so
    /// that dedicated flags win.
    pub fn overrides(&self) -> Result<Vec<(String, toml::Value)>, CliError> {
        let mut out = self
            .set
            .iter()
            .map(|s| parse_override(s))
            .collect::<Result<Vec<_>, _>>()?;
        let mut put = |key: &str, value: toml::Value| out.push((key.to_string(), value));
        let float = |v: f64| toml::Value::Float(v);
        if let Some(v) = self.energy {
            put("beam.kinetic_energy", float(v));
        }
        if let Some(v) = self.wavelength {
            put("laser.wavelength", float(v));
        }
        if let Some(v) = self.intensity {
            put("laser.intensity", float(v));
        }
        if let Some(v) = self.harmonic_intensity {
            put("laser.harmonic_intensity", float(v));
        }
        if let Some(v) = self.harmonic {
            put("laser.harmonic", toml::Value::Integer(v.into()));
        }
        if let Some(v) = self.argument_formula {
            let f = match v {
                FormulaArg::Exact => ArgumentFormula::Exact,
                FormulaArg::Simplified => ArgumentFormula::Simplified,
            };
            put("laser.argument_formula", enum_value(f));
        }
        if let Some(v) = self.radius_convention {
            let r = match v {
                RadiusArg::Absolute => RadiusConvention::Absolute,
                RadiusArg::Reduced => RadiusConvention::Reduced,
            };
            put("potential.radius_convention", enum_value(r));
        }
        if let Some(v) = self.coulomb {
            let c = match v {
                CoulombArg::Numeric => CoulombModel::Numeric,
                CoulombArg::SphereFormFactor => CoulombModel::SphereFormFactor,
                CoulombArg::Literal => CoulombModel::Literal,
                CoulombArg::Off => CoulombModel::Off,
            };
            put("model.coulomb", enum_value(c));
        }
        if let Some(v) = self.theta_min {
            put("scan.theta_min_deg", float(v));
        }
        if let Some(v) = self.theta_max {
            put("scan.theta_max_deg", float(v));
        }
        if let Some(v) = self.theta_step {
            put("scan.theta_step_deg", float(v));
        }
        if let Some(v) = self.theta {
            put("scan.theta_deg", float(v));
        }
        if !self.orders.is_empty() {
            put(
                "scan.orders",
                toml::Value::Array(
                    self.orders
                        .iter()
                        .map(|&n| toml::Value::Integer(n))
                        .collect(),
                ),
            );
        }
        if !self.ratios.is_empty() {
            put(
                "scan.ratios",
                toml::Value::Array(self.ratios.iter().map(|&r| float(r)).collect()),
            );
        }
        if let Some(v) = self.ratio_order {
            put("scan.ratio_order", toml::Value::Integer(v));
        }
        if let Some(v) = self.phase_points {
            let v =
                i64::try_from(v).map_err(|_| CliError::config("--phase-points", "too large"))?;
            put("scan.phase_points", toml::Value::Integer(v));
        }
        if let Some(v) = self.total_theta_min {
            put("scan.total_theta_min_deg", float(v));
        }
        if self.include_coulomb {
            put("scan.total_includes_coulomb", toml::Value::Boolean(true));
        }
        if let Some(v) = self.phase_units {
            put("scan.phase_units", enum_value(v));
        }
        if let Some(v) = self.format {
            put("scan.format", enum_value(v));
        }
        if let Some(v) = &self.output {
            put("scan.output", toml::Value::String(v.clone()));
        }
        Ok(out)
    }

    /// Configuration after file, `--set` and flag overrides.
    pub fn resolve(&self) -> Result<RunConfig, CliError> {
        let mut config = RunConfig::load(self.config.as_deref(), &self.overrides()?)?;
        if let Some(phase) = self.phase {
            config.laser.phase = config.scan.phase_units.to_radians(phase);
            config.validate()?;
        }
        Ok(config)
    }
}

fn emit(
    config: &RunConfig,
    write: impl FnOnce(&mut dyn Write) -> std::io::Result<()>,
) -> Result<(), CliError> {
    match &config.scan.output {
        Some(path) => {
            let file = File::create(path).map_err(|e| {
                CliError::config("scan.output", &format!("cannot create {path}: {e}"))
            })?;
            let mut w = BufWriter::new(file);
            write(&mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = std::io::stdout();
            let mut w = stdout.lock();
            write(&mut w)?;
            w.flush()?;
        }
    }
    Ok(())
}

/// Computes the table of a data-producing subcommand.
pub fn table(command: &Command, config: &RunConfig) -> Result<Table, CliError> {
    match command {
        Command::Born(_) => commands::born(config),
        Command::Dressed(_) => commands::dressed(config),
        Command::Inelastic(_) => commands::inelastic(config),
        Command::PhaseScan(_) => commands::phase_scan(config),
        Command::RatioScan(_) => commands::ratio_scan(config),
        Command::Total(_) => commands::total(config),
        Command::Validate(_) => unreachable!("validate produces a report"),
    }
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    let config = cli.command.options().resolve()?;
    if config.laser.needs_dipole_warning() {
        eprintln!(
            "lascat: warning: proton intensity parameter {:.3} is large; dipole treatment questionable",
            config.laser.proton_intensity_parameter()
        );
    }
    if let Command::Validate(_) = cli.command {
        let checks = validate::run(&config);
        let text = validate::report(&checks);
        emit(&config, |w| w.write_all(text.as_bytes()))?;
        let failed = checks.iter().filter(|c| !c.pass).count();
        return if failed == 0 {
            Ok(())
        } else {
            Err(CliError::Validation(failed))
        };
    }
    let table = table(&cli.command, &config)?;
    emit(&config, |w| {
        write_table(w, &table, &config, config.scan.format)
    })
}
