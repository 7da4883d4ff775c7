//! Run configuration: a TOML document with `[beam]`, `[laser]`,
//! `[potential]`, `[model]` and `[scan]` tables. Every key is optional and
//! falls back to the 49 MeV p + ¹²C defaults.

use std::path::Path;

use lascat_core::cross_section::ScatteringSetup;
use lascat_core::kinematics::{Beam, LaserField};
use lascat_core::potential::{CoulombModel, OpticalPotentialParams};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Output encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// Unit of phase values on the command line and in phase columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum PhaseUnits {
    #[default]
    Rad,
    Pi,
}

impl PhaseUnits {
    pub fn to_radians(self, value: f64) -> f64 {
        match self {
            PhaseUnits::Rad => value,
            PhaseUnits::Pi => value * std::f64::consts::PI,
        }
    }

    pub fn from_radians(self, value: f64) -> f64 {
        match self {
            PhaseUnits::Rad => value,
            PhaseUnits::Pi => value / std::f64::consts::PI,
        }
    }

    pub fn column(self) -> &'static str {
        match self {
            PhaseUnits::Rad => "phase_rad",
            PhaseUnits::Pi => "phase_pi",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ModelConfig {
    /// Coulomb transform used by angle scans.
    pub coulomb: CoulombModel,
}

/// Grids and output controls. Angles are in degrees.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ScanConfig {
    pub theta_min_deg: f64,
    pub theta_max_deg: f64,
    pub theta_step_deg: f64,
    /// Net photon orders for `dressed` and `phase-scan`.
    pub orders: Vec<i64>,
    /// Fixed angle of phase and ratio scans.
    pub theta_deg: f64,
    /// Points on the uniform phase grid over [0, 2π].
    pub phase_points: usize,
    /// I/I_m values of `ratio-scan`.
    pub ratios: Vec<f64>,
    /// Photon order of `ratio-scan`.
    pub ratio_order: i64,
    /// Forward cutoff of `total`.
    pub total_theta_min_deg: f64,
    /// Add the Coulomb term to `total`.
    pub total_includes_coulomb: bool,
    pub phase_units: PhaseUnits,
    pub format: Format,
    /// Output file; standard output when absent.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            theta_min_deg: 1.0,
            theta_max_deg: 179.0,
            theta_step_deg: 0.25,
            orders: vec![-1, 0, 1],
            theta_deg: 7.0,
            phase_points: 181,
            ratios: vec![1.0, 2.0, 10.0],
            ratio_order: 1,
            total_theta_min_deg: 1.0,
            total_includes_coulomb: false,
            phase_units: PhaseUnits::Rad,
            format: Format::Csv,
            output: None,
        }
    }
}

impl ScanConfig {
    /// Angle grid in radians, endpoints included.
    pub fn angles(&self) -> Result<Vec<f64>, CliError> {
        Ok(self
            .angles_deg()?
            .into_iter()
            .map(f64::to_radians)
            .collect())
    }

    /// Angle grid in degrees, endpoints included.
    pub fn angles_deg(&self) -> Result<Vec<f64>, CliError> {
        let (lo, hi, step) = (self.theta_min_deg, self.theta_max_deg, self.theta_step_deg);
        if !(lo > 0.0 && lo <= hi && hi <= 180.0) {
            return Err(CliError::config(
                "scan.theta_min_deg",
                "angle range must satisfy 0 < theta_min_deg <= theta_max_deg <= 180",
            ));
        }
        if !(step > 0.0) {
            return Err(CliError::config(
                "scan.theta_step_deg",
                "step must be positive",
            ));
        }
        let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
        let mut grid: Vec<f64> = (0..count).map(|i| (lo + step * i as f64).min(hi)).collect();
        if grid.last().is_some_and(|&last| hi - last > 1e-9 * step) {
            grid.push(hi);
        }
        Ok(grid)
    }

    /// Uniform phase grid over [0, 2π] in radians.
    pub fn phases(&self) -> Result<Vec<f64>, CliError> {
        if self.phase_points < 2 {
            return Err(CliError::config(
                "scan.phase_points",
                "need at least 2 phase points",
            ));
        }
        Ok(lascat_core::cross_section::linspace(
            0.0,
            std::f64::consts::TAU,
            self.phase_points,
        ))
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub beam: Beam,
    pub laser: LaserField,
    pub potential: OpticalPotentialParams,
    pub model: ModelConfig,
    pub scan: ScanConfig,
}

impl RunConfig {
    pub fn setup(&self) -> ScatteringSetup {
        ScatteringSetup {
            beam: self.beam,
            laser: self.laser,
            potential: self.potential,
            coulomb: self.model.coulomb,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        self.beam
            .validate()
            .map_err(|e| CliError::invalid("beam", e))?;
        self.laser
            .validate()
            .map_err(|e| CliError::invalid("laser", e))?;
        self.potential
            .validate()
            .map_err(|e| CliError::invalid("potential", e))?;
        self.scan.angles()?;
        self.scan.phases()?;
        Ok(())
    }

    /// Parses a document, applies `overrides` (dotted key, TOML value) and
    /// validates the result.
    pub fn from_toml_with(
        text: &str,
        overrides: &[(String, toml::Value)],
    ) -> Result<Self, CliError> {
        let mut doc: toml::Table = text
            .parse()
            .map_err(|e: toml::de::Error| CliError::config("config", e.message().trim()))?;
        for (key, value) in overrides {
            set_key(&mut doc, key, value.clone())?;
        }
        let config: RunConfig = toml::Value::Table(doc)
            .try_into()
            .map_err(|e: toml::de::Error| CliError::config("config", e.message().trim()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        Self::from_toml_with(text, &[])
    }

    pub fn load(
        path: Option<&Path>,
        overrides: &[(String, toml::Value)],
    ) -> Result<Self, CliError> {
        let text = match path {
            Some(p) => std::fs::read_to_string(p).map_err(|e| {
                CliError::config("--config", &format!("cannot read {}: {e}", p.display()))
            })?,
            None => String::new(),
        };
        Self::from_toml_with(&text, overrides)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("configuration serializes")
    }

    /// Recovers the configuration echoed in an output metadata block.
    pub fn from_metadata(text: &str) -> Result<Self, CliError> {
        let mut body = String::new();
        let mut inside = false;
        for line in text.lines() {
            let Some(rest) = line.strip_prefix('#') else {
                break;
            };
            let rest = rest.strip_prefix(' ').unwrap_or(rest);
            if inside {
                body.push_str(rest);
                body.push('\n');
            } else if rest.trim() == CONFIG_MARKER {
                inside = true;
            }
        }
        if !inside {
            return Err(CliError::config("metadata", "no configuration echo found"));
        }
        Self::from_toml(&body)
    }
}

/// Line introducing the configuration echo in CSV metadata.
pub const CONFIG_MARKER: &str = "config:";

/// Parses `key=value` where value is a TOML literal; bare words are taken
/// as strings.
pub fn parse_override(spec: &str) -> Result<(String, toml::Value), CliError> {
    let (key, raw) = spec
        .split_once('=')
        .ok_or_else(|| CliError::config("--set", &format!("expected key=value, got `{spec}`")))?;
    let key = key.trim().to_string();
    let raw = raw.trim();
    let value = format!("v = {raw}")
        .parse::<toml::Table>()
        .ok()
        .and_then(|mut t| t.remove("v"))
        .unwrap_or_else(|| toml::Value::String(raw.to_string()));
    Ok((key, value))
}

fn set_key(doc: &mut toml::Table, key: &str, value: toml::Value) -> Result<(), CliError> {
    let mut parts: Vec<&str> = key.split('.').collect();
    let leaf = parts
        .pop()
        .filter(|s| !s.is_empty())
        .ok_or_else(|| CliError::config(key, "empty key"))?;
    let mut table = doc;
    for part in parts {
        let entry = table
            .entry(part.to_string())
            .or_insert_with(|| toml::Value::Table(toml::Table::new()));
        table = entry
            .as_table_mut()
            .ok_or_else(|| CliError::config(key, &format!("`{part}` is not a table")))?;
    }
    table.insert(leaf.to_string(), value);
    Ok(())
}
