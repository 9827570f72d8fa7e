use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use wqed::cli::{self, MapArgs, SpectrumArgs};

#[derive(Parser)]
#[command(
    name = "wqed",
    version,
    about = "Single-photon transport through an emitter chain"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the dipole-dipole coupling matrix for a chain config.
    Ddi {
        /// Chain configuration (.toml or .json).
        #[arg(long)]
        config: PathBuf,
        /// Emit JSON instead of aligned text.
        #[arg(long)]
        json: bool,
        /// Also write the report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep a reflection/transmission spectrum to CSV.
    Spectrum {
        #[arg(long)]
        config: PathBuf,
        /// Lowest detuning, units of Gamma0.
        #[arg(long, allow_hyphen_values = true)]
        delta_min: f64,
        /// Highest detuning, units of Gamma0.
        #[arg(long, allow_hyphen_values = true)]
        delta_max: f64,
        /// Number of grid points (>= 2).
        #[arg(long, default_value_t = 2001)]
        points: usize,
        /// Output CSV path; a .manifest.json is written next to it.
        #[arg(long)]
        out: PathBuf,
        /// Zero out all dipole-dipole couplings.
        #[arg(long)]
        no_ddi: bool,
        /// Use the analytic one/two-emitter formulas instead of the solver.
        #[arg(long)]
        closed_form: bool,
    },
    /// Extract peaks, minima, bandwidth, and a coupling estimate from a
    /// spectrum CSV.
    Features {
        /// Spectrum CSV produced by `wqed spectrum`.
        #[arg(long)]
        input: PathBuf,
        /// Reflection level for the bandwidth measurement.
        #[arg(long, default_value_t = 0.5)]
        threshold: f64,
        /// Also write the JSON report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep reflection over a (detuning, inter-emitter phase) grid.
    Map {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        delta_min: f64,
        #[arg(long, allow_hyphen_values = true)]
        delta_max: f64,
        #[arg(long, default_value_t = 401)]
        delta_points: usize,
        /// Lowest phase kl, radians.
        #[arg(long)]
        kl_min: f64,
        /// Highest phase kl, radians.
        #[arg(long)]
        kl_max: f64,
        #[arg(long, default_value_t = 64)]
        kl_points: usize,
        /// Output CSV path (long form: kl,delta,reflection).
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        no_ddi: bool,
    },
    /// Write a built-in parameter set as a config file.
    Preset {
        /// One of the built-in names; pass an invalid name to list them.
        name: String,
        /// Output path (defaults to <name>.toml).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Ddi { config, json, out } => cli::cmd_ddi(&config, json, out.as_deref()),
        Command::Spectrum {
            config,
            delta_min,
            delta_max,
            points,
            out,
            no_ddi,
            closed_form,
        } => cli::cmd_spectrum(&SpectrumArgs {
            config_path: config,
            delta_min,
            delta_max,
            points,
            out,
            no_ddi,
            closed_form,
        }),
        Command::Features {
            input,
            threshold,
            out,
        } => cli::cmd_features(&input, threshold, out.as_deref()),
        Command::Map {
            config,
            delta_min,
            delta_max,
            delta_points,
            kl_min,
            kl_max,
            kl_points,
            out,
            no_ddi,
        } => cli::cmd_map(&MapArgs {
            config_path: config,
            delta_min,
            delta_max,
            delta_points,
            kl_min,
            kl_max,
            kl_points,
            out,
            no_ddi,
        }),
        Command::Preset { name, out } => cli::cmd_preset(&name, out.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
