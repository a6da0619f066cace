//! Configuration loading: defaults, TOML files, and `key=value` overrides.
//!
//! Every tunable in the simulator lives in [`SimConfig`]. Values resolve in
//! three layers — built-in defaults, then an optional TOML file, then
//! command-line overrides — and the fully resolved struct can be echoed back
//! out as JSON so a run's provenance is never ambiguous.

use std::fmt::Display;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::election::ElectionConfig;
use crate::fuzzy::FuzzyConfig;
use crate::simulation::EnergyModel;
use crate::topology::Position;
use crate::trust::TrustConfig;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{message}")]
    Parse { message: String },
    #[error("override `{key}`: {message}")]
    Override { key: String, message: String },
    #[error("config key `{key}`: {message}")]
    Invalid { key: String, message: String },
    #[error("topology csv line {line}: {message}")]
    Csv { line: usize, message: String },
}

impl ConfigError {
    pub fn invalid(key: impl Display, message: impl Display) -> Self {
        Self::Invalid { key: key.to_string(), message: message.to_string() }
    }

    pub fn csv(line: usize, message: impl Display) -> Self {
        Self::Csv { line, message: message.to_string() }
    }
}

/// The full simulator configuration. Unknown keys are rejected so typos in
/// config files fail loudly instead of silently falling back to defaults.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SimConfig {
    pub node_count: usize,
    /// Number of generated nodes flagged as packet-droppers.
    pub malicious_count: usize,
    /// Field dimensions in meters.
    pub field_width: f64,
    pub field_height: f64,
    /// Radio transmission range in meters.
    pub tx_range: f64,
    /// Sink (base station) position; also the stand-in for the cloud.
    pub sink: Position,
    /// Simulation horizon in rounds.
    pub max_rounds: u32,
    /// Topology seed for single runs.
    pub seed: u64,
    /// Optional explicit seed list for comparisons; when absent, seeds are
    /// derived as `seed, seed+1, ..`.
    pub seeds: Option<Vec<u64>>,
    pub trust: TrustConfig,
    pub election: ElectionConfig,
    pub energy: EnergyModel,
    pub fuzzy: FuzzyConfig,
}

impl Default for SimConfig {
    fn default() -> Self {
        Self {
            node_count: 122,
            malicious_count: 13,
            field_width: 1000.0,
            field_height: 1000.0,
            tx_range: 250.0,
            sink: Position::new(500.0, 500.0),
            max_rounds: 1000,
            seed: 1,
            seeds: None,
            trust: TrustConfig::default(),
            election: ElectionConfig::default(),
            energy: EnergyModel::default(),
            fuzzy: FuzzyConfig::default(),
        }
    }
}

impl SimConfig {
    /// Resolves a config from an optional TOML file plus `key=value`
    /// overrides (dotted paths, e.g. `trust.ttf=40`). Overrides win over the
    /// file, which wins over defaults. The result is validated.
    pub fn load(path: Option<&Path>, overrides: &[String]) -> Result<Self, ConfigError> {
        let text = match path {
            Some(p) => Some(fs::read_to_string(p).map_err(|source| ConfigError::Io {
                path: p.display().to_string(),
                source,
            })?),
            None => None,
        };

        let cfg: SimConfig = if overrides.is_empty() {
            // No overrides: deserialize the file directly so parse errors
            // keep their line/column references.
            match (&text, path) {
                (Some(text), Some(p)) => toml::from_str(text).map_err(|e| ConfigError::Parse {
                    message: format!("{}: {e}", p.display()),
                })?,
                _ => SimConfig::default(),
            }
        } else {
            let mut table = match (&text, path) {
                (Some(text), Some(p)) => {
                    text.parse::<toml::Table>().map_err(|e| ConfigError::Parse {
                        message: format!("{}: {e}", p.display()),
                    })?
                }
                _ => toml::Table::new(),
            };
            for ov in overrides {
                apply_override(&mut table, ov)?;
            }
            toml::Value::Table(table)
                .try_into()
                .map_err(|e| ConfigError::Parse { message: e.to_string() })?
        };

        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.node_count < 2 {
            return Err(ConfigError::invalid("node_count", "must be at least 2"));
        }
        if self.malicious_count >= self.node_count {
            return Err(ConfigError::invalid(
                "malicious_count",
                "must be smaller than node_count",
            ));
        }
        if self.field_width <= 0.0 || self.field_height <= 0.0 {
            return Err(ConfigError::invalid("field_width/field_height", "must be positive"));
        }
        if self.tx_range <= 0.0 {
            return Err(ConfigError::invalid("tx_range", "must be positive"));
        }
        if self.sink.x < 0.0
            || self.sink.x > self.field_width
            || self.sink.y < 0.0
            || self.sink.y > self.field_height
        {
            return Err(ConfigError::invalid("sink", "must lie inside the field"));
        }
        self.trust.validate()?;
        self.election.validate()?;
        self.energy.validate()?;
        self.fuzzy.validate()?;
        Ok(())
    }

    /// Seed list used by multi-seed commands: the explicit `seeds` list if
    /// present, otherwise `count` consecutive seeds starting at `seed`.
    pub fn seed_list(&self, count: usize) -> Vec<u64> {
        match &self.seeds {
            Some(s) if !s.is_empty() => s.clone(),
            _ => (0..count as u64).map(|i| self.seed.wrapping_add(i)).collect(),
        }
    }
}

/// Applies one `dotted.key=value` override to a raw TOML table, creating
/// intermediate tables as needed.
fn apply_override(table: &mut toml::Table, spec: &str) -> Result<(), ConfigError> {
    let (key, raw) = spec.split_once('=').ok_or_else(|| ConfigError::Override {
        key: spec.to_string(),
        message: "expected key=value".to_string(),
    })?;
    let key = key.trim();
    if key.is_empty() {
        return Err(ConfigError::Override {
            key: spec.to_string(),
            message: "empty key".to_string(),
        });
    }

    let value = parse_override_value(raw.trim());
    let parts: Vec<&str> = key.split('.').collect();
    let mut current = table;
    for part in &parts[..parts.len() - 1] {
        current = current
            .entry(part.to_string())
            .or_insert_with(|| toml::Value::Table(toml::Table::new()))
            .as_table_mut()
            .ok_or_else(|| ConfigError::Override {
                key: key.to_string(),
                message: format!("`{part}` is not a table"),
            })?;
    }
    current.insert(parts[parts.len() - 1].to_string(), value);
    Ok(())
}

/// Interprets an override value with TOML literal syntax (numbers, booleans,
/// arrays, quoted strings); anything that does not parse is taken as a bare
/// string, so `--set fuzzy.rulebase_path=rules.txt` works unquoted.
fn parse_override_value(raw: &str) -> toml::Value {
    match format!("v = {raw}").parse::<toml::Table>() {
        Ok(mut t) => t.remove("v").expect("parsed table has key v"),
        Err(_) => toml::Value::String(raw.to_string()),
    }
}
