//! Domain types, unit conventions, and validation shared by all other modules.
//!
//! # Unit conventions
//!
//! * All decay rates, detunings, and dipole-dipole couplings are expressed in
//!   units of the free-space spontaneous decay rate `Γ0`. The absolute value of
//!   `Γ0` (about 7.5 MHz for the reference quantum-dot system, see
//!   [`REFERENCE_GAMMA0_MHZ`]) never enters the scattering math; every
//!   implemented expression is homogeneous in rate units.
//! * All positions and wavelengths are in nanometers. Propagation phases are
//!   derived from wavelengths in nanometers.

use num_complex::Complex64;
use thiserror::Error;

/// Nominal free-space decay rate of the reference emitter, in MHz.
///
/// Provided for converting rate-unit outputs into laboratory frequencies. It
/// is documentation-level only: no computation in this crate depends on it.
pub const REFERENCE_GAMMA0_MHZ: f64 = 7.5;

/// One two-level quantum emitter side-coupled to the waveguide.
#[derive(Debug, Clone, PartialEq)]
pub struct Emitter {
    /// Position in 3D space, nanometers.
    pub position: [f64; 3],
    /// Decay rate into the guided waveguide mode, units of `Γ0`.
    ///
    /// This is the combined rate `Γ = J²/v_g`; the bare coupling `J` and the
    /// group velocity `v_g` never appear separately in any scattering
    /// expression and are therefore not independent inputs.
    pub gamma_wg: f64,
    /// Decay rate into all non-guided channels, units of `Γ0`.
    pub gamma_loss: f64,
}

impl Emitter {
    pub fn new(position: [f64; 3], gamma_wg: f64, gamma_loss: f64) -> Self {
        Self {
            position,
            gamma_wg,
            gamma_loss,
        }
    }
}

/// Waveguide and transition wavelengths plus the propagation direction.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveguideParams {
    /// Guided-mode wavelength `λ_sp`, nanometers.
    pub lambda_guided: f64,
    /// Emitter transition wavelength `λ_qd` (= 2πc/ω_A), nanometers.
    pub lambda_transition: f64,
    /// Unit vector along the waveguide axis.
    pub propagation_axis: [f64; 3],
}

impl WaveguideParams {
    /// Guided-mode wavenumber `k = 2π/λ_sp`, in 1/nm.
    pub fn guided_wavenumber(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.lambda_guided
    }

    /// Free-space wavenumber of the transition, `ω_A/c = 2π/λ_qd`, in 1/nm.
    pub fn transition_wavenumber(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.lambda_transition
    }
}

/// Shared orientation of all emitter dipoles (unit vector).
#[derive(Debug, Clone, PartialEq)]
pub struct DipoleOrientation {
    pub direction: [f64; 3],
}

impl Default for DipoleOrientation {
    /// The reference geometry orients every dipole along −y.
    fn default() -> Self {
        Self {
            direction: [0.0, -1.0, 0.0],
        }
    }
}

/// A full chain description: emitters, waveguide, dipole orientation, and the
/// dipole-dipole coupling policy.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainConfig {
    /// Emitters, ordered by non-decreasing projection onto the propagation
    /// axis after [`validate_chain`].
    pub emitters: Vec<Emitter>,
    pub waveguide: WaveguideParams,
    pub dipole: DipoleOrientation,
    /// Whether geometric dipole-dipole couplings are computed at all.
    pub ddi_enabled: bool,
    /// Optional explicit coupling matrix `Ω_ij` in units of `Γ0`. When
    /// present it takes precedence over both `ddi_enabled` and the geometric
    /// computation. Must be symmetric with zero diagonal, N×N.
    pub ddi_override: Option<Vec<Vec<f64>>>,
}

impl ChainConfig {
    pub fn len(&self) -> usize {
        self.emitters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.emitters.is_empty()
    }

    /// Projection of emitter `j`'s position onto the propagation axis, nm.
    pub fn axis_projection(&self, j: usize) -> f64 {
        dot3(self.emitters[j].position, self.waveguide.propagation_axis)
    }
}

/// Photon detuning `Δ_k = ω_k − ω_A`, units of `Γ0`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Detuning(pub f64);

/// Right- and left-moving field coefficients in one waveguide segment.
///
/// Segment `s` lies between emitter `s` and emitter `s+1` (segment 0 is the
/// input side, segment N the output side). `t` is referenced at the segment's
/// right-bounding emitter, except for the final segment which is referenced
/// at the last emitter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SegmentAmplitudes {
    pub t: Complex64,
    pub r: Complex64,
}

/// Scattering amplitudes of the full chain at one detuning.
///
/// The phase reference planes sit at the first emitter (input) and the last
/// emitter (output), so a single-emitter chain carries no propagation phase
/// and `t` for an N-emitter chain includes the accumulated inter-emitter
/// phase. `|t|²` and `|r|²` are independent of this choice.
#[derive(Debug, Clone, PartialEq)]
pub struct ScatteringResult {
    /// Complex transmission amplitude.
    pub t: Complex64,
    /// Complex reflection amplitude.
    pub r: Complex64,
    /// Field coefficients for the N+1 waveguide segments.
    pub segment_amps: Vec<SegmentAmplitudes>,
    /// Emitter excitation amplitudes, one per emitter, in a common rescaled
    /// normalization (proportional to the bare amplitudes `e_k^(j)`).
    pub excitations: Vec<Complex64>,
}

impl ScatteringResult {
    /// Reflection probability `R = |r|²`.
    pub fn reflection(&self) -> f64 {
        self.r.norm_sqr()
    }

    /// Transmission probability `T = |t|²`.
    pub fn transmission(&self) -> f64 {
        self.t.norm_sqr()
    }

    /// Fraction lost to non-guided channels, `1 − R − T`.
    pub fn loss_fraction(&self) -> f64 {
        1.0 - self.reflection() - self.transmission()
    }
}

/// Validation failures for [`ChainConfig`].
#[derive(Debug, Clone, Error, PartialEq)]
pub enum ChainError {
    #[error("chain contains no emitters")]
    EmptyChain,
    #[error("emitter {emitter}: {field} = {value} is negative or non-finite")]
    NegativeRate {
        emitter: usize,
        field: &'static str,
        value: f64,
    },
    #[error("emitter {emitter}: position has non-finite component")]
    NonFinitePosition { emitter: usize },
    #[error("{name} must be a unit vector (norm = {norm})")]
    NonUnitVector { name: &'static str, norm: f64 },
    #[error("{name} = {value} must be positive and finite")]
    NonPositiveWavelength { name: &'static str, value: f64 },
    #[error("ddi override must be {expected}x{expected}, got row of length {found}")]
    DdiOverrideShape { expected: usize, found: usize },
    #[error("ddi override is asymmetric at ({i},{j}): {a} != {b}")]
    AsymmetricDdiOverride { i: usize, j: usize, a: f64, b: f64 },
    #[error("ddi override has non-zero diagonal at ({i},{i}): {value}")]
    NonZeroDdiDiagonal { i: usize, value: f64 },
}

const UNIT_NORM_TOL: f64 = 1e-12;

/// Checks every invariant and returns the config with emitters sorted by
/// non-decreasing projection onto the propagation axis.
///
/// The sort is stable: emitters with equal axis projections keep their input
/// order. A `ddi_override`, when present, is permuted consistently with the
/// emitter reordering. Validating an already validated config is the
/// identity.
pub fn validate_chain(mut config: ChainConfig) -> Result<ChainConfig, ChainError> {
    if config.emitters.is_empty() {
        return Err(ChainError::EmptyChain);
    }

    check_positive(config.waveguide.lambda_guided, "lambda_guided")?;
    check_positive(config.waveguide.lambda_transition, "lambda_transition")?;
    check_unit(config.waveguide.propagation_axis, "propagation_axis")?;
    check_unit(config.dipole.direction, "dipole direction")?;

    for (j, e) in config.emitters.iter().enumerate() {
        if !e.position.iter().all(|c| c.is_finite()) {
            return Err(ChainError::NonFinitePosition { emitter: j });
        }
        check_rate(e.gamma_wg, "gamma_wg", j)?;
        check_rate(e.gamma_loss, "gamma_loss", j)?;
    }

    let n = config.emitters.len();
    if let Some(matrix) = &config.ddi_override {
        if matrix.len() != n {
            return Err(ChainError::DdiOverrideShape {
                expected: n,
                found: matrix.len(),
            });
        }
        for row in matrix {
            if row.len() != n {
                return Err(ChainError::DdiOverrideShape {
                    expected: n,
                    found: row.len(),
                });
            }
        }
        for (i, row) in matrix.iter().enumerate() {
            if row[i] != 0.0 {
                return Err(ChainError::NonZeroDdiDiagonal { i, value: row[i] });
            }
            for (j, &value) in row.iter().enumerate().skip(i + 1) {
                if value != matrix[j][i] {
                    return Err(ChainError::AsymmetricDdiOverride {
                        i,
                        j,
                        a: value,
                        b: matrix[j][i],
                    });
                }
            }
        }
    }

    // Stable sort along the axis, carrying the override with the permutation.
    let axis = config.waveguide.propagation_axis;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        let pa = dot3(config.emitters[a].position, axis);
        let pb = dot3(config.emitters[b].position, axis);
        pa.partial_cmp(&pb).expect("positions checked finite")
    });
    if order.iter().enumerate().any(|(i, &o)| i != o) {
        config.emitters = order.iter().map(|&o| config.emitters[o].clone()).collect();
        if let Some(matrix) = &config.ddi_override {
            let permuted = order
                .iter()
                .map(|&oi| order.iter().map(|&oj| matrix[oi][oj]).collect())
                .collect();
            config.ddi_override = Some(permuted);
        }
    }

    Ok(config)
}

fn check_positive(value: f64, name: &'static str) -> Result<(), ChainError> {
    if !(value.is_finite() && value > 0.0) {
        return Err(ChainError::NonPositiveWavelength { name, value });
    }
    Ok(())
}

fn check_rate(value: f64, field: &'static str, emitter: usize) -> Result<(), ChainError> {
    if !(value.is_finite() && value >= 0.0) {
        return Err(ChainError::NegativeRate {
            emitter,
            field,
            value,
        });
    }
    Ok(())
}

fn check_unit(v: [f64; 3], name: &'static str) -> Result<(), ChainError> {
    let norm = norm3(v);
    if !norm.is_finite() || (norm - 1.0).abs() > UNIT_NORM_TOL {
        return Err(ChainError::NonUnitVector { name, norm });
    }
    Ok(())
}

pub(crate) fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn sub3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub(crate) fn norm3(v: [f64; 3]) -> f64 {
    dot3(v, v).sqrt()
}
