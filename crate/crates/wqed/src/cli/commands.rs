//! Command implementations behind the thin `wqed` binary.
//!
//! Every command is an ordinary function so the pipeline stays scriptable
//! and testable without spawning processes. Exit codes: 0 success, 2 config
//! or usage error, 3 geometry error (coincident emitters), 4 numerical
//! error, 1 I/O failure.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::{
    estimate_ddi_from_fano, find_features, sweep_map, sweep_spectrum, uniform_grid, AnalysisError,
    Spectrum,
};
use crate::ddi::{build_ddi_matrix, DdiError, DdiMatrix};
use crate::scattering::{gap_phases, single_emitter, two_emitter_asymmetric};
use crate::types::{ChainConfig, Detuning};

use super::config_file::{config_digest, load_config, save_config_toml, ConfigError, ConfigFile};
use super::presets::{preset, PRESET_NAMES};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Geometry(String),
    #[error("{0}")]
    Numerical(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Config(_) => 2,
            CliError::Geometry(_) => 3,
            CliError::Numerical(_) => 4,
        }
    }

    fn io(path: &Path, err: std::io::Error) -> Self {
        CliError::Io(format!("{}: {err}", path.display()))
    }
}

impl From<ConfigError> for CliError {
    fn from(err: ConfigError) -> Self {
        CliError::Config(err.to_string())
    }
}

impl From<DdiError> for CliError {
    fn from(err: DdiError) -> Self {
        match err {
            DdiError::CoincidentEmitters { .. } => CliError::Geometry(err.to_string()),
            other => CliError::Config(other.to_string()),
        }
    }
}

impl From<AnalysisError> for CliError {
    fn from(err: AnalysisError) -> Self {
        match err {
            AnalysisError::SolveAt { .. } => CliError::Numerical(err.to_string()),
            AnalysisError::Ddi(inner) => inner.into(),
            other => CliError::Config(other.to_string()),
        }
    }
}

/// Run record written next to every emitted data file.
#[derive(Debug, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool_version: String,
    pub config_digest: String,
    pub command: serde_json::Value,
    pub outputs: Vec<String>,
    pub resolved_config: ConfigFile,
}

impl RunManifest {
    fn write_next_to(&self, output: &Path) -> Result<PathBuf, CliError> {
        let path = manifest_path(output);
        let text = serde_json::to_string_pretty(self).expect("manifests always serialize");
        fs::write(&path, text).map_err(|e| CliError::io(&path, e))?;
        Ok(path)
    }
}

pub fn manifest_path(output: &Path) -> PathBuf {
    let mut name = output.file_name().unwrap_or_default().to_os_string();
    name.push(".manifest.json");
    output.with_file_name(name)
}

/// 12 significant digits, the fixed number format of every emitted value.
fn fmt_value(x: f64) -> String {
    format!("{x:.11e}")
}

// ---------------------------------------------------------------------------
// ddi

#[derive(Debug, Serialize)]
struct DdiReport {
    tool_version: String,
    config_digest: String,
    n: usize,
    units: String,
    omega: Vec<Vec<f64>>,
}

pub fn cmd_ddi(config_path: &Path, json: bool, out: Option<&Path>) -> Result<(), CliError> {
    let config = load_config(config_path)?;
    let matrix = build_ddi_matrix(&config)?;
    let report = DdiReport {
        tool_version: TOOL_VERSION.to_string(),
        config_digest: config_digest(&config),
        n: config.len(),
        units: "Gamma0".to_string(),
        omega: matrix.to_rows(),
    };
    let rendered = if json {
        serde_json::to_string_pretty(&report).expect("report serializes")
    } else {
        render_ddi_text(&report)
    };
    println!("{rendered}");
    if let Some(path) = out {
        fs::write(path, format!("{rendered}\n")).map_err(|e| CliError::io(path, e))?;
    }
    Ok(())
}

fn render_ddi_text(report: &DdiReport) -> String {
    let mut text = format!(
        "dipole-dipole couplings for {} emitter(s), units of Gamma0\nconfig_digest: {}\n",
        report.n, report.config_digest
    );
    for row in &report.omega {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>14.6}")).collect();
        text.push_str(&cells.join(" "));
        text.push('\n');
    }
    text.pop();
    text
}

// ---------------------------------------------------------------------------
// spectrum

#[derive(Debug, Clone)]
pub struct SpectrumArgs {
    pub config_path: PathBuf,
    pub delta_min: f64,
    pub delta_max: f64,
    pub points: usize,
    pub out: PathBuf,
    pub no_ddi: bool,
    pub closed_form: bool,
}

pub fn cmd_spectrum(args: &SpectrumArgs) -> Result<(), CliError> {
    let config = load_config(&args.config_path)?;
    let ddi = resolve_ddi(&config, args.no_ddi)?;
    let spectrum = if args.closed_form {
        closed_form_spectrum(&config, &ddi, args.delta_min, args.delta_max, args.points)?
    } else {
        sweep_spectrum(&config, &ddi, args.delta_min, args.delta_max, args.points)?
    };

    let digest = config_digest(&config);
    let mut csv = String::new();
    csv.push_str("# wqed spectrum\n");
    csv.push_str(&format!("# tool_version: {TOOL_VERSION}\n"));
    csv.push_str(&format!("# config_digest: {digest}\n"));
    csv.push_str(&format!(
        "# grid: delta_min={} delta_max={} points={}\n",
        args.delta_min, args.delta_max, args.points
    ));
    csv.push_str(&format!(
        "# flags: ddi={} closed_form={}\n",
        if args.no_ddi { "off" } else { "on" },
        args.closed_form
    ));
    csv.push_str("delta,reflection,transmission,loss\n");
    for i in 0..spectrum.len() {
        csv.push_str(&format!(
            "{},{},{},{}\n",
            fmt_value(spectrum.deltas[i]),
            fmt_value(spectrum.reflection[i]),
            fmt_value(spectrum.transmission[i]),
            fmt_value(spectrum.loss[i]),
        ));
    }
    fs::write(&args.out, csv).map_err(|e| CliError::io(&args.out, e))?;

    let manifest = RunManifest {
        tool_version: TOOL_VERSION.to_string(),
        config_digest: digest,
        command: serde_json::json!({
            "subcommand": "spectrum",
            "config": args.config_path.display().to_string(),
            "delta_min": args.delta_min,
            "delta_max": args.delta_max,
            "points": args.points,
            "no_ddi": args.no_ddi,
            "closed_form": args.closed_form,
        }),
        outputs: vec![args.out.display().to_string()],
        resolved_config: ConfigFile::from_chain(&config),
    };
    manifest.write_next_to(&args.out)?;
    Ok(())
}

fn resolve_ddi(config: &ChainConfig, no_ddi: bool) -> Result<DdiMatrix, CliError> {
    if no_ddi {
        Ok(DdiMatrix::zeros(config.len()))
    } else {
        Ok(build_ddi_matrix(config)?)
    }
}

/// Analytic route for one- and two-emitter chains.
fn closed_form_spectrum(
    config: &ChainConfig,
    ddi: &DdiMatrix,
    delta_min: f64,
    delta_max: f64,
    points: usize,
) -> Result<Spectrum, CliError> {
    let n = config.len();
    if n > 2 {
        return Err(CliError::Config(format!(
            "--closed-form supports chains of at most 2 emitters, got {n}"
        )));
    }
    let deltas = uniform_grid(delta_min, delta_max, points).map_err(CliError::from)?;
    let mut reflection = Vec::with_capacity(deltas.len());
    let mut transmission = Vec::with_capacity(deltas.len());
    for &delta in &deltas {
        let res = if n == 1 {
            single_emitter(
                Detuning(delta),
                config.emitters[0].gamma_wg,
                config.emitters[0].gamma_loss,
            )
        } else {
            let kl = gap_phases(config)[0].kl;
            two_emitter_asymmetric(
                Detuning(delta),
                config.emitters[0].gamma_wg,
                config.emitters[0].gamma_loss,
                config.emitters[1].gamma_wg,
                config.emitters[1].gamma_loss,
                kl,
                ddi.get(0, 1),
            )
        };
        reflection.push(res.reflection());
        transmission.push(res.transmission());
    }
    let loss = reflection
        .iter()
        .zip(&transmission)
        .map(|(r, t)| 1.0 - r - t)
        .collect();
    Ok(Spectrum {
        deltas,
        reflection,
        transmission,
        loss,
    })
}

// ---------------------------------------------------------------------------
// features

#[derive(Debug, Serialize)]
struct PointReport {
    delta: f64,
    reflection: f64,
}

#[derive(Debug, Serialize)]
struct DdiEstimateReport {
    omega: f64,
    gamma_wg: f64,
    kl: f64,
    fano_minimum_delta: f64,
    caveat: String,
}

#[derive(Debug, Serialize)]
struct FeatureReport {
    source: String,
    threshold: f64,
    peaks: Vec<PointReport>,
    minima: Vec<PointReport>,
    bandwidth: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    flag: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ddi_estimate: Option<DdiEstimateReport>,
}

pub fn cmd_features(input: &Path, threshold: f64, out: Option<&Path>) -> Result<(), CliError> {
    let spectrum = read_spectrum_csv(input)?;
    let features = find_features(&spectrum, threshold).map_err(CliError::from)?;

    // An Ω estimate is attached when the sibling manifest describes a
    // symmetric two-emitter chain and the spectrum has an interior minimum.
    let ddi_estimate = load_sibling_manifest(input).and_then(|manifest| {
        let config = crate::types::validate_chain(manifest.resolved_config.into_chain()).ok()?;
        if config.len() != 2 {
            return None;
        }
        let g1 = config.emitters[0].gamma_wg;
        let g2 = config.emitters[1].gamma_wg;
        if (g1 - g2).abs() > 1e-9 * g1.abs().max(g2.abs()).max(1.0) {
            return None;
        }
        let kl = gap_phases(&config)[0].kl;
        let fano = features
            .minima
            .iter()
            .min_by(|a, b| a.reflection.total_cmp(&b.reflection))?;
        let omega = estimate_ddi_from_fano(Detuning(fano.delta), g1, kl).ok()?;
        Some(DdiEstimateReport {
            omega,
            gamma_wg: g1,
            kl,
            fano_minimum_delta: fano.delta,
            caveat: "assumes a lossless symmetric pair; non-guided loss shifts the \
                     minimum and biases the estimate"
                .to_string(),
        })
    });

    let report = FeatureReport {
        source: input.display().to_string(),
        threshold,
        peaks: features
            .peaks
            .iter()
            .map(|p| PointReport {
                delta: p.delta,
                reflection: p.reflection,
            })
            .collect(),
        minima: features
            .minima
            .iter()
            .map(|p| PointReport {
                delta: p.delta,
                reflection: p.reflection,
            })
            .collect(),
        bandwidth: features.bandwidth,
        flag: features.no_peak.then(|| "no_peak".to_string()),
        ddi_estimate,
    };
    let rendered = serde_json::to_string_pretty(&report).expect("report serializes");
    println!("{rendered}");
    if let Some(path) = out {
        fs::write(path, format!("{rendered}\n")).map_err(|e| CliError::io(path, e))?;
    }
    Ok(())
}

fn load_sibling_manifest(input: &Path) -> Option<RunManifest> {
    let text = fs::read_to_string(manifest_path(input)).ok()?;
    serde_json::from_str(&text).ok()
}

fn read_spectrum_csv(path: &Path) -> Result<Spectrum, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let mut lines = text.lines().filter(|l| !l.trim_start().starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| CliError::Config(format!("{}: empty spectrum file", path.display())))?;
    if header.trim() != "delta,reflection,transmission,loss" {
        return Err(CliError::Config(format!(
            "{}: expected header 'delta,reflection,transmission,loss', found {header:?}",
            path.display()
        )));
    }
    let mut spectrum = Spectrum {
        deltas: Vec::new(),
        reflection: Vec::new(),
        transmission: Vec::new(),
        loss: Vec::new(),
    };
    for (row, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 {
            return Err(CliError::Config(format!(
                "{}: row {} has {} fields, expected 4",
                path.display(),
                row + 2,
                fields.len()
            )));
        }
        let mut values = [0.0_f64; 4];
        for (slot, field) in values.iter_mut().zip(&fields) {
            *slot = field.trim().parse().map_err(|e| {
                CliError::Config(format!("{}: row {}: {e}", path.display(), row + 2))
            })?;
        }
        spectrum.deltas.push(values[0]);
        spectrum.reflection.push(values[1]);
        spectrum.transmission.push(values[2]);
        spectrum.loss.push(values[3]);
    }
    Ok(spectrum)
}

// ---------------------------------------------------------------------------
// map

#[derive(Debug, Clone)]
pub struct MapArgs {
    pub config_path: PathBuf,
    pub delta_min: f64,
    pub delta_max: f64,
    pub delta_points: usize,
    pub kl_min: f64,
    pub kl_max: f64,
    pub kl_points: usize,
    pub out: PathBuf,
    pub no_ddi: bool,
}

/// Uniform grid that also admits the degenerate single-point case
/// (`n == 1` with `min == max`).
fn grid_or_single(name: &str, min: f64, max: f64, n: usize) -> Result<Vec<f64>, CliError> {
    if n == 1 {
        if !(min.is_finite() && min == max) {
            return Err(CliError::Config(format!(
                "a single-point {name} grid needs min == max, got [{min}, {max}]"
            )));
        }
        return Ok(vec![min]);
    }
    uniform_grid(min, max, n).map_err(CliError::from)
}

pub fn cmd_map(args: &MapArgs) -> Result<(), CliError> {
    let config = load_config(&args.config_path)?;
    let deltas = grid_or_single("delta", args.delta_min, args.delta_max, args.delta_points)?;
    let kls = grid_or_single("kl", args.kl_min, args.kl_max, args.kl_points)?;
    let map = sweep_map(&config, &deltas, &kls, !args.no_ddi).map_err(CliError::from)?;

    let digest = config_digest(&config);
    let mut csv = String::new();
    csv.push_str("# wqed map\n");
    csv.push_str(&format!("# tool_version: {TOOL_VERSION}\n"));
    csv.push_str(&format!("# config_digest: {digest}\n"));
    csv.push_str(&format!(
        "# grid: delta=[{},{}]x{} kl=[{},{}]x{}\n",
        args.delta_min, args.delta_max, args.delta_points, args.kl_min, args.kl_max, args.kl_points
    ));
    csv.push_str(&format!(
        "# flags: ddi={}\n",
        if args.no_ddi { "off" } else { "on" }
    ));
    csv.push_str("kl,delta,reflection\n");
    for (i, &kl) in map.kl.iter().enumerate() {
        for (j, &delta) in map.deltas.iter().enumerate() {
            csv.push_str(&format!(
                "{},{},{}\n",
                fmt_value(kl),
                fmt_value(delta),
                fmt_value(map.reflection[i][j]),
            ));
        }
    }
    fs::write(&args.out, csv).map_err(|e| CliError::io(&args.out, e))?;

    let manifest = RunManifest {
        tool_version: TOOL_VERSION.to_string(),
        config_digest: digest,
        command: serde_json::json!({
            "subcommand": "map",
            "config": args.config_path.display().to_string(),
            "delta_min": args.delta_min,
            "delta_max": args.delta_max,
            "delta_points": args.delta_points,
            "kl_min": args.kl_min,
            "kl_max": args.kl_max,
            "kl_points": args.kl_points,
            "no_ddi": args.no_ddi,
        }),
        outputs: vec![args.out.display().to_string()],
        resolved_config: ConfigFile::from_chain(&config),
    };
    manifest.write_next_to(&args.out)?;
    Ok(())
}

// ---------------------------------------------------------------------------
// preset

pub fn cmd_preset(name: &str, out: Option<&Path>) -> Result<(), CliError> {
    let config = preset(name).ok_or_else(|| {
        CliError::Config(format!(
            "unknown preset {name:?}; valid names: {}",
            PRESET_NAMES.join(", ")
        ))
    })?;
    let config = crate::types::validate_chain(config).expect("built-in presets always validate");
    let default_path = PathBuf::from(format!("{name}.toml"));
    let path = out.unwrap_or(&default_path);
    save_config_toml(path, &config).map_err(|e| CliError::io(path, e))?;
    println!("wrote {}", path.display());
    Ok(())
}
