//! Single-photon transport in a one-dimensional waveguide side-coupled to a
//! chain of two-level quantum emitters with direct dipole-dipole interaction.
//!
//! The crate computes complex reflection/transmission amplitudes from both
//! closed-form expressions (one and two emitters) and a general N-emitter
//! linear-system solver, then extracts spectral features: split peaks, Fano
//! minima, high-reflection bandwidth, and an inversion of the Fano-minimum
//! position back to the dipole-dipole coupling strength.
//!
//! All rates, detunings, and couplings are in units of the free-space decay
//! rate `Γ0`; all lengths are in nanometers (see [`types`]).
//!
//! # Start with the examples
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! cargo run -p wqed --example single_emitter        # resonance line of one emitter
//! cargo run -p wqed --example two_emitter_splitting # DDI-split reflection peaks
//! cargo run -p wqed --example fano_estimate         # coupling strength from the Fano dip
//! cargo run -p wqed --example asymmetric_coupling   # unequal waveguide couplings
//! cargo run -p wqed --example bandwidth_broadening  # five-emitter high-R bandwidth
//! cargo run -p wqed --example reflection_map        # 2D (detuning, phase) reflection map
//! cargo run -p wqed --example ddi_vs_distance       # coupling versus emitter separation
//! ```
//!
//! # Library sketch
//!
//! ```
//! use wqed::analysis::{find_features, sweep_spectrum};
//! use wqed::ddi::build_ddi_matrix;
//! use wqed::types::validate_chain;
//!
//! let config = validate_chain(wqed::cli::preset("fig2-close").unwrap()).unwrap();
//! let ddi = build_ddi_matrix(&config).unwrap();
//! let spectrum = sweep_spectrum(&config, &ddi, -80.0, 80.0, 2001).unwrap();
//! let features = find_features(&spectrum, 0.5).unwrap();
//! assert_eq!(features.peaks.len(), 2); // the coupling splits the line
//! ```
//!
//! The thin `wqed` binary exposes the same pipeline as subcommands (`ddi`,
//! `spectrum`, `features`, `map`, `preset`) with stable CSV/JSON output for
//! plotting tools.

pub mod analysis;
pub mod cli;
pub mod ddi;
pub mod scattering;
pub mod types;

pub use analysis::{
    estimate_ddi_from_fano, find_features, predict_two_emitter_features, sweep_map, sweep_spectrum,
    AnalysisError, ReflectionMap, SpectralFeatures, Spectrum,
};
pub use ddi::{build_ddi_matrix, pair_ddi, DdiError, DdiMatrix};
pub use scattering::{
    gap_phases, single_emitter, solve_chain, two_emitter_asymmetric, two_emitter_symmetric,
    PhasedGap, SolveError,
};
pub use types::{
    validate_chain, ChainConfig, ChainError, Detuning, DipoleOrientation, Emitter,
    ScatteringResult, SegmentAmplitudes, WaveguideParams,
};
