//! Tabular output: CSV with a `#` metadata block, or schema-versioned JSON.

use std::io::Write;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;

use crate::config::{Format, RunConfig, CONFIG_MARKER};

pub const JSON_SCHEMA: &str = "lascat.table/1";
pub const TOOL: &str = concat!("lascat ", env!("CARGO_PKG_VERSION"));

/// Column-major data plus run metadata.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table {
    pub command: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    /// Ordered key/value annotations (normalization, residuals, warnings).
    pub metadata: Vec<(String, String)>,
}

impl Table {
    pub fn new(command: &str, columns: Vec<String>) -> Self {
        Self {
            command: command.to_string(),
            columns,
            rows: Vec::new(),
            metadata: Vec::new(),
        }
    }

    pub fn note(&mut self, key: &str, value: impl ToString) {
        self.metadata.push((key.to_string(), value.to_string()));
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

fn timestamp() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

pub fn write_csv(
    out: &mut (impl Write + ?Sized),
    table: &Table,
    config: &RunConfig,
) -> std::io::Result<()> {
    writeln!(out, "# tool = {TOOL}")?;
    writeln!(out, "# command = {}", table.command)?;
    writeln!(out, "# generated_unix = {}", timestamp())?;
    for (k, v) in &table.metadata {
        writeln!(out, "# {k} = {v}")?;
    }
    writeln!(out, "# {CONFIG_MARKER}")?;
    for line in config.to_toml().lines() {
        if line.is_empty() {
            writeln!(out, "#")?;
        } else {
            writeln!(out, "# {line}")?;
        }
    }
    writeln!(out, "{}", table.columns.join(","))?;
    for row in &table.rows {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", cells.join(","))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct JsonDocument<'a> {
    schema: &'static str,
    tool: &'static str,
    command: &'a str,
    generated_unix: u64,
    metadata: serde_json::Map<String, serde_json::Value>,
    config: &'a RunConfig,
    columns: &'a [String],
    rows: &'a [Vec<f64>],
}

pub fn write_json(
    out: &mut (impl Write + ?Sized),
    table: &Table,
    config: &RunConfig,
) -> std::io::Result<()> {
    let metadata = table
        .metadata
        .iter()
        .map(|(k, v)| {
            let value = v
                .parse::<f64>()
                .ok()
                .and_then(serde_json::Number::from_f64)
                .map(serde_json::Value::Number)
                .unwrap_or_else(|| serde_json::Value::String(v.clone()));
            (k.clone(), value)
        })
        .collect();
    let doc = JsonDocument {
        schema: JSON_SCHEMA,
        tool: TOOL,
        command: &table.command,
        generated_unix: timestamp(),
        metadata,
        config,
        columns: &table.columns,
        rows: &table.rows,
    };
    serde_json::to_writer_pretty(&mut *out, &doc)?;
    writeln!(out)
}

pub fn write_table(
    out: &mut (impl Write + ?Sized),
    table: &Table,
    config: &RunConfig,
    format: Format,
) -> std::io::Result<()> {
    match format {
        Format::Csv => write_csv(out, table, config),
        Format::Json => write_json(out, table, config),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new("born", vec!["theta_deg".into(), "dcs_mb_sr".into()]);
        t.note("kappa", 0.004);
        t.push(vec![1.0, 2.5]);
        t.push(vec![2.0, 0.125]);
        t
    }

    #[test]
    fn csv_layout() {
        let mut buf = Vec::new();
        write_csv(&mut buf, &sample(), &RunConfig::default()).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let data: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(data, ["theta_deg,dcs_mb_sr", "1,2.5", "2,0.125"]);
        assert!(text.contains("# kappa = 0.004"));
        assert_eq!(
            RunConfig::from_metadata(&text).unwrap(),
            RunConfig::default()
        );
    }

    #[test]
    fn json_layout() {
        let mut buf = Vec::new();
        write_json(&mut buf, &sample(), &RunConfig::default()).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v["schema"], JSON_SCHEMA);
        assert_eq!(v["metadata"]["kappa"], 0.004);
        assert_eq!(v["rows"][1][1], 0.125);
        let config: RunConfig = serde_json::from_value(v["config"].clone()).unwrap();
        assert_eq!(config, RunConfig::default());
    }
}
