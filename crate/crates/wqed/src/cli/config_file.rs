//! Declarative chain-configuration files and their content digest.
//!
//! The schema is fixed so configs stay portable: top-level tables
//! `waveguide { lambda_guided_nm, lambda_transition_nm, propagation_axis }`,
//! `dipole { direction }`, an `emitters` array of
//! `{ position_nm, gamma_wg, gamma_loss }`, and `ddi { enabled, override? }`.
//! Rates are in units of `Γ0`, lengths in nm. The concrete syntax is chosen
//! by file extension: `.toml` or `.json`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::types::{
    validate_chain, ChainConfig, ChainError, DipoleOrientation, Emitter, WaveguideParams,
};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ConfigFile {
    pub waveguide: WaveguideSection,
    #[serde(default)]
    pub dipole: DipoleSection,
    pub emitters: Vec<EmitterSection>,
    #[serde(default)]
    pub ddi: DdiSection,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct WaveguideSection {
    pub lambda_guided_nm: f64,
    pub lambda_transition_nm: f64,
    #[serde(default = "default_axis")]
    pub propagation_axis: [f64; 3],
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct DipoleSection {
    pub direction: [f64; 3],
}

impl Default for DipoleSection {
    fn default() -> Self {
        Self {
            direction: [0.0, -1.0, 0.0],
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct EmitterSection {
    pub position_nm: [f64; 3],
    pub gamma_wg: f64,
    pub gamma_loss: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct DdiSection {
    #[serde(default = "default_true")]
    pub enabled: bool,
    #[serde(default, rename = "override", skip_serializing_if = "Option::is_none")]
    pub override_matrix: Option<Vec<Vec<f64>>>,
}

impl Default for DdiSection {
    fn default() -> Self {
        Self {
            enabled: true,
            override_matrix: None,
        }
    }
}

fn default_axis() -> [f64; 3] {
    [1.0, 0.0, 0.0]
}

fn default_true() -> bool {
    true
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot parse {path}: {message}")]
    Parse { path: String, message: String },
    #[error("unsupported config extension {extension:?} (use .toml or .json)")]
    UnsupportedExtension { extension: String },
    #[error("invalid configuration: {0}")]
    Invalid(#[from] ChainError),
}

impl ConfigFile {
    pub fn from_chain(config: &ChainConfig) -> Self {
        Self {
            waveguide: WaveguideSection {
                lambda_guided_nm: config.waveguide.lambda_guided,
                lambda_transition_nm: config.waveguide.lambda_transition,
                propagation_axis: config.waveguide.propagation_axis,
            },
            dipole: DipoleSection {
                direction: config.dipole.direction,
            },
            emitters: config
                .emitters
                .iter()
                .map(|e| EmitterSection {
                    position_nm: e.position,
                    gamma_wg: e.gamma_wg,
                    gamma_loss: e.gamma_loss,
                })
                .collect(),
            ddi: DdiSection {
                enabled: config.ddi_enabled,
                override_matrix: config.ddi_override.clone(),
            },
        }
    }

    pub fn into_chain(self) -> ChainConfig {
        ChainConfig {
            emitters: self
                .emitters
                .into_iter()
                .map(|e| Emitter::new(e.position_nm, e.gamma_wg, e.gamma_loss))
                .collect(),
            waveguide: WaveguideParams {
                lambda_guided: self.waveguide.lambda_guided_nm,
                lambda_transition: self.waveguide.lambda_transition_nm,
                propagation_axis: self.waveguide.propagation_axis,
            },
            dipole: DipoleOrientation {
                direction: self.dipole.direction,
            },
            ddi_enabled: self.ddi.enabled,
            ddi_override: self.ddi.override_matrix,
        }
    }
}

/// Reads, parses, and validates a chain configuration.
pub fn load_config(path: &Path) -> Result<ChainConfig, ConfigError> {
    let text = fs::read_to_string(path).map_err(|source| ConfigError::Read {
        path: path.display().to_string(),
        source,
    })?;
    let extension = path
        .extension()
        .and_then(|e| e.to_str())
        .unwrap_or("")
        .to_ascii_lowercase();
    let parsed: ConfigFile = match extension.as_str() {
        "toml" => toml::from_str(&text).map_err(|e| ConfigError::Parse {
            path: path.display().to_string(),
            message: e.to_string(),
        })?,
        "json" => serde_json::from_str(&text).map_err(|e| ConfigError::Parse {
            path: path.display().to_string(),
            message: e.to_string(),
        })?,
        other => {
            return Err(ConfigError::UnsupportedExtension {
                extension: other.to_string(),
            })
        }
    };
    Ok(validate_chain(parsed.into_chain())?)
}

/// Writes a validated config as TOML.
pub fn save_config_toml(path: &Path, config: &ChainConfig) -> Result<(), std::io::Error> {
    let file = ConfigFile::from_chain(config);
    let text = toml::to_string_pretty(&file).expect("chain configs always serialize to TOML");
    fs::write(path, text)
}

/// Content hash of a resolved (validated) config: SHA-256 over its canonical
/// JSON form. Identical resolved configs digest identically regardless of
/// source syntax or emitter input order.
pub fn config_digest(config: &ChainConfig) -> String {
    let canonical = serde_json::to_vec(&ConfigFile::from_chain(config))
        .expect("chain configs always serialize to JSON");
    let hash = Sha256::digest(&canonical);
    hash.iter().map(|b| format!("{b:02x}")).collect()
}
