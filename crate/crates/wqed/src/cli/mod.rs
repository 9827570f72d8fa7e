//! Config ingestion, preset library, sweep orchestration, and CSV/JSON
//! emission for the `wqed` binary.

pub mod commands;
pub mod config_file;
pub mod presets;

pub use commands::{
    cmd_ddi, cmd_features, cmd_map, cmd_preset, cmd_spectrum, manifest_path, CliError, MapArgs,
    RunManifest, SpectrumArgs, TOOL_VERSION,
};
pub use config_file::{config_digest, load_config, save_config_toml, ConfigError, ConfigFile};
pub use presets::{preset, PRESET_NAMES};
