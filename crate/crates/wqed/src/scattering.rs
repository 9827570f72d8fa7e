//! Single-photon scattering amplitudes: closed forms for one and two
//! emitters, and a general N-emitter linear-system solver.
//!
//! # Model
//!
//! A photon at detuning `Δ` (units of `Γ0`) propagates through a 1D waveguide
//! side-coupled to N two-level emitters. Emitter `j` couples to the guided
//! mode with rate `Γ_j` and to non-guided channels with rate `Γ'_j`; emitters
//! `i` and `j` are additionally coupled by the direct dipole-dipole strength
//! `Ω_ij`. Between consecutive emitters the photon accumulates the phase
//! `kl_j = 2π·gap_j/λ_sp`, evaluated at the guided wavelength only: detunings
//! of tens of `Γ0` shift `k` by parts in 10⁸, so the phase is treated as
//! frequency-independent across a scan (fixed-k approximation).
//!
//! # Conventions
//!
//! Amplitude phase reference planes sit at the first emitter (input) and the
//! last emitter (output). A single emitter therefore carries no propagation
//! phase, an empty-coupling chain has `t = e^{iΣkl}`, and `|t|²`, `|r|²` are
//! convention-free. The emitter excitation amplitudes are reported in a
//! common rescaled normalization `ẽ_j ∝ e_j` in which only the combined
//! rates `Γ_j` appear.
//!
//! For two lossless emitters with unequal couplings the transmission zeros
//! (perfect-reflection points) satisfy `Δ² = 2·√(Γ1Γ2)·Ω·sin(kl) + Ω²`; the
//! factor 2 on the cross term is confirmed numerically by the acceptance
//! suite against the general solver.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use thiserror::Error;

use crate::ddi::DdiMatrix;
use crate::types::{ChainConfig, Detuning, ScatteringResult, SegmentAmplitudes};

/// Condition-number proxy above which the assembled system is reported as
/// numerically singular.
pub const SINGULARITY_THRESHOLD: f64 = 1e14;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum SolveError {
    #[error(
        "scattering system is numerically singular at delta = {delta} \
         (condition estimate {cond_estimate:.2e}); degenerate parameters"
    )]
    SingularSystem { delta: f64, cond_estimate: f64 },
}

/// Propagation phase accumulated between two consecutive emitters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhasedGap {
    /// `k·(x_{j+1} − x_j)` with positions projected onto the waveguide axis;
    /// non-negative for a validated (sorted) chain.
    pub kl: f64,
}

/// Phases of the N−1 gaps of a validated chain, from the guided wavelength.
pub fn gap_phases(config: &ChainConfig) -> Vec<PhasedGap> {
    let k = config.waveguide.guided_wavenumber();
    (1..config.len())
        .map(|j| PhasedGap {
            kl: k * (config.axis_projection(j) - config.axis_projection(j - 1)),
        })
        .collect()
}

fn img(x: f64) -> Complex64 {
    Complex64::new(0.0, x)
}

fn phase(kl: f64) -> Complex64 {
    Complex64::from_polar(1.0, kl)
}

/// Scattering off a single emitter:
///
/// ```text
/// t = (Δ + iΓ'/2) / (iΓ + Δ + iΓ'/2),   r = −iΓ / (iΓ + Δ + iΓ'/2)
/// ```
///
/// so `t = 1 + r` identically. On resonance a lossless emitter reflects
/// perfectly. A fully decoupled emitter (`Γ = 0`) transmits freely.
pub fn single_emitter(delta: Detuning, gamma_wg: f64, gamma_loss: f64) -> ScatteringResult {
    let one = Complex64::ONE;
    let zero = Complex64::ZERO;
    if gamma_wg == 0.0 {
        return ScatteringResult {
            t: one,
            r: zero,
            segment_amps: vec![
                SegmentAmplitudes { t: one, r: zero },
                SegmentAmplitudes { t: one, r: zero },
            ],
            excitations: vec![zero],
        };
    }
    let d = Complex64::new(delta.0, gamma_loss / 2.0);
    let den = img(gamma_wg) + d;
    let t = d / den;
    let r = -img(gamma_wg) / den;
    let excitation = img(1.0) * r / gamma_wg.sqrt();
    ScatteringResult {
        t,
        r,
        segment_amps: vec![
            SegmentAmplitudes { t: one, r },
            SegmentAmplitudes { t, r: zero },
        ],
        excitations: vec![excitation],
    }
}

/// Two identical emitters (`Γ`, `Γ'` shared) separated by the phase `kl`,
/// with direct coupling `omega`.
///
/// With `δ = Δ + iΓ'/2` and `p = e^{ikl}`:
///
/// ```text
/// t = [ iΓΩ(p² − 1) + p(δ² − Ω²) ] / D
/// r = [ (1 − p²)Γ² − iΓ((1 + p²)δ + 2pΩ) ] / D
/// D = (p² − 1)Γ² + 2iΓ(δ + pΩ) + δ² − Ω²
/// ```
///
/// For `Γ' = 0` the reflection reaches 1 at `Δ = ±√(2ΓΩ sin kl + Ω²)` and
/// vanishes at the Fano point `Δ = −Γ tan kl − Ω sec kl`. At `kl = 0` the
/// numerator and denominator share a zero and the spectrum is a single
/// Lorentzian of width `2Γ` shifted to `Δ = Ω`; `kl = π` behaves the same
/// with `Ω → −Ω`.
pub fn two_emitter_symmetric(
    delta: Detuning,
    gamma_wg: f64,
    gamma_loss: f64,
    kl: f64,
    omega: f64,
) -> ScatteringResult {
    let g = gamma_wg;
    let d = Complex64::new(delta.0, gamma_loss / 2.0);
    let p = phase(kl);
    let p2 = phase(2.0 * kl);
    let den = (p2 - 1.0) * g * g + img(2.0 * g) * (d + p * omega) + d * d - omega * omega;
    let t = (img(g * omega) * (p2 - 1.0) + p * (d * d - omega * omega)) / den;
    let r = ((1.0 - p2) * g * g - img(g) * ((1.0 + p2) * d + 2.0 * p * omega)) / den;
    finish_two_emitter(t, r, delta, g, gamma_loss, g, gamma_loss, kl, omega)
}

/// Two emitters with individual rates; reduces exactly to
/// [`two_emitter_symmetric`] when the rates match.
///
/// With `δ_j = Δ + iΓ'_j/2`, `g = √(Γ1Γ2)` and `p = e^{ikl}`:
///
/// ```text
/// t = [ igΩ(p² − 1) + p(δ1δ2 − Ω²) ] / D
/// r = [ (1 − p²)Γ1Γ2 − ip²Γ2δ1 − iΓ1δ2 − 2ipgΩ ] / D
/// D = (p² − 1)Γ1Γ2 + i(Γ1δ2 + Γ2δ1) + 2ipgΩ + δ1δ2 − Ω²
/// ```
///
/// Without direct coupling (`Ω = 0`) the reflection spectrum has a single
/// maximum; the splitting into two lossless perfect-reflection points at
/// `Δ² = 2gΩ sin kl + Ω²` requires `Ω ≠ 0`.
pub fn two_emitter_asymmetric(
    delta: Detuning,
    gamma_wg_1: f64,
    gamma_loss_1: f64,
    gamma_wg_2: f64,
    gamma_loss_2: f64,
    kl: f64,
    omega: f64,
) -> ScatteringResult {
    let (g1, g2) = (gamma_wg_1, gamma_wg_2);
    let g = (g1 * g2).sqrt();
    let d1 = Complex64::new(delta.0, gamma_loss_1 / 2.0);
    let d2 = Complex64::new(delta.0, gamma_loss_2 / 2.0);
    let p = phase(kl);
    let p2 = phase(2.0 * kl);
    let den =
        (p2 - 1.0) * g1 * g2 + img(1.0) * (g1 * d2 + g2 * d1) + img(2.0 * g * omega) * p + d1 * d2
            - omega * omega;
    let t = (img(g * omega) * (p2 - 1.0) + p * (d1 * d2 - omega * omega)) / den;
    let r =
        ((1.0 - p2) * g1 * g2 - img(g2) * p2 * d1 - img(g1) * d2 - img(2.0 * g * omega) * p) / den;
    finish_two_emitter(
        t,
        r,
        delta,
        gamma_wg_1,
        gamma_loss_1,
        gamma_wg_2,
        gamma_loss_2,
        kl,
        omega,
    )
}

/// Backfills segment and excitation amplitudes around closed-form `t`, `r`.
///
/// The emitter equations give a 2×2 system for the excitations with
/// determinant `δ1δ2 − Ω²`; where that degenerates (a shared numerator/
/// denominator zero, e.g. `kl = 0`, `Γ' = 0`, `Δ = ±Ω`) the interior
/// amplitudes are recovered from the assembled junction equations instead.
/// The returned `t`, `r` always come from the closed forms.
#[allow(clippy::too_many_arguments)]
fn finish_two_emitter(
    t: Complex64,
    r: Complex64,
    delta: Detuning,
    g1: f64,
    gl1: f64,
    g2: f64,
    gl2: f64,
    kl: f64,
    omega: f64,
) -> ScatteringResult {
    let d1 = Complex64::new(delta.0, gl1 / 2.0);
    let d2 = Complex64::new(delta.0, gl2 / 2.0);
    let det = d1 * d2 - omega * omega;
    let scale = d1.norm().max(d2.norm()).max(omega.abs()).max(1.0);
    let (e1, e2) = if det.norm() > 1e-12 * scale * scale {
        let drive1 = g1.sqrt() * (1.0 + r);
        let drive2 = g2.sqrt() * t;
        (
            (drive1 * d2 + omega * drive2) / det,
            (d1 * drive2 + omega * drive1) / det,
        )
    } else {
        let solved = assemble_and_solve(
            delta,
            &[g1, g2],
            &[gl1, gl2],
            &[kl],
            &DdiMatrix::from_rows(&[vec![0.0, omega], vec![omega, 0.0]])
                .expect("2x2 coupling matrix is symmetric by construction"),
        );
        match solved {
            Ok(res) => (res.excitations[0], res.excitations[1]),
            Err(_) => (
                Complex64::new(f64::NAN, f64::NAN),
                Complex64::new(f64::NAN, f64::NAN),
            ),
        }
    };
    let r2 = -img(g2.sqrt()) * e2;
    let t1 = t + img(g2.sqrt()) * e2;
    ScatteringResult {
        t,
        r,
        segment_amps: vec![
            SegmentAmplitudes {
                t: Complex64::ONE,
                r,
            },
            SegmentAmplitudes { t: t1, r: r2 },
            SegmentAmplitudes {
                t,
                r: Complex64::ZERO,
            },
        ],
        excitations: vec![e1, e2],
    }
}

/// Transmission through two identical emitters with the guided-mode feedback
/// term removed from the denominator and `Ω = 0`, in the global plane-wave
/// convention. Equals the square of the single-emitter transmission; kept
/// public for the test suite that verifies exactly that factorization.
#[doc(hidden)]
pub fn two_emitter_dropped_feedback(delta: Detuning, gamma_wg: f64, gamma_loss: f64) -> Complex64 {
    let d = Complex64::new(delta.0, gamma_loss / 2.0);
    let den = (d + img(gamma_wg)) * (d + img(gamma_wg));
    d * d / den
}

/// Solves the full junction system for a validated chain at one detuning.
///
/// Unknowns are the segment coefficients `t_1..t_N`, `r_1..r_N` and the
/// rescaled excitations `ẽ_1..ẽ_N`, with boundary values `t_0 = 1`,
/// `r_{N+1} = 0`. For emitter `j` (gap phase `kl_j` after it, `kl_N = 0`):
///
/// ```text
/// t_j e^{−i kl_j} − t_{j−1} + i√Γ_j ẽ_j = 0
/// r_{j+1} e^{i kl_j} − r_j − i√Γ_j ẽ_j = 0
/// √Γ_j (t_{j−1} + r_j) + Σ_{i≠j} Ω_ji ẽ_i − (Δ + iΓ'_j/2) ẽ_j = 0
/// ```
///
/// The dense 3N×3N complex system is solved by LU with partial pivoting; the
/// chains of interest stay far below sizes where structure exploitation
/// would matter.
pub fn solve_chain(
    config: &ChainConfig,
    ddi: &DdiMatrix,
    delta: Detuning,
) -> Result<ScatteringResult, SolveError> {
    let n = config.len();
    assert!(n >= 1, "solve_chain requires a validated, non-empty chain");
    assert_eq!(ddi.n(), n, "coupling matrix dimension must match the chain");
    assert!(delta.0.is_finite(), "detuning must be finite");
    let gammas: Vec<f64> = config.emitters.iter().map(|e| e.gamma_wg).collect();
    let losses: Vec<f64> = config.emitters.iter().map(|e| e.gamma_loss).collect();
    let kls: Vec<f64> = gap_phases(config).iter().map(|g| g.kl).collect();
    assemble_and_solve(delta, &gammas, &losses, &kls, ddi)
}

fn assemble_and_solve(
    delta: Detuning,
    gammas: &[f64],
    losses: &[f64],
    kls: &[f64],
    ddi: &DdiMatrix,
) -> Result<ScatteringResult, SolveError> {
    let n = gammas.len();
    let dim = 3 * n;
    let idx_t = |j: usize| j - 1; // j = 1..N
    let idx_r = |j: usize| n + j - 1;
    let idx_e = |j: usize| 2 * n + j - 1;
    // Phase of the segment after emitter j; the output segment is referenced
    // at the last emitter, so its phase factor is 1.
    let seg_kl = |j: usize| if j < n { kls[j - 1] } else { 0.0 };

    let mut a = DMatrix::<Complex64>::zeros(dim, dim);
    let mut b = DVector::<Complex64>::zeros(dim);

    for j in 1..=n {
        let sqrt_g = gammas[j - 1].sqrt();
        let row_t = idx_t(j);
        a[(row_t, idx_t(j))] = phase(-seg_kl(j));
        if j >= 2 {
            a[(row_t, idx_t(j - 1))] = -Complex64::ONE;
        }
        a[(row_t, idx_e(j))] = img(sqrt_g);
        if j == 1 {
            b[row_t] = Complex64::ONE; // moves the known t_0 = 1 to the RHS
        }

        let row_r = idx_r(j);
        if j < n {
            a[(row_r, idx_r(j + 1))] = phase(seg_kl(j));
        }
        a[(row_r, idx_r(j))] = -Complex64::ONE;
        a[(row_r, idx_e(j))] = -img(sqrt_g);

        let row_e = idx_e(j);
        if j >= 2 {
            a[(row_e, idx_t(j - 1))] = Complex64::from(sqrt_g);
        }
        a[(row_e, idx_r(j))] = Complex64::from(sqrt_g);
        for i in 1..=n {
            if i != j {
                a[(row_e, idx_e(i))] = Complex64::from(ddi.get(j - 1, i - 1));
            }
        }
        a[(row_e, idx_e(j))] = -Complex64::new(delta.0, losses[j - 1] / 2.0);
        if j == 1 {
            b[row_e] = Complex64::from(-sqrt_g);
        }
    }

    let lu = a.lu();
    let cond = diagonal_condition_estimate(lu.u().as_slice(), dim);
    if !cond.is_finite() || cond > SINGULARITY_THRESHOLD {
        return Err(SolveError::SingularSystem {
            delta: delta.0,
            cond_estimate: cond,
        });
    }
    let solution = lu.solve(&b).ok_or(SolveError::SingularSystem {
        delta: delta.0,
        cond_estimate: cond,
    })?;

    let mut segment_amps = Vec::with_capacity(n + 1);
    segment_amps.push(SegmentAmplitudes {
        t: Complex64::ONE,
        r: solution[idx_r(1)],
    });
    for s in 1..n {
        segment_amps.push(SegmentAmplitudes {
            t: solution[idx_t(s)],
            r: solution[idx_r(s + 1)],
        });
    }
    segment_amps.push(SegmentAmplitudes {
        t: solution[idx_t(n)],
        r: Complex64::ZERO,
    });

    Ok(ScatteringResult {
        t: solution[idx_t(n)],
        r: solution[idx_r(1)],
        segment_amps,
        excitations: (1..=n).map(|j| solution[idx_e(j)]).collect(),
    })
}

/// Ratio of the largest to the smallest magnitude on the U diagonal: a cheap
/// proxy for the condition number after LU with partial pivoting.
fn diagonal_condition_estimate(u_column_major: &[Complex64], dim: usize) -> f64 {
    let mut max_d: f64 = 0.0;
    let mut min_d = f64::INFINITY;
    for i in 0..dim {
        let m = u_column_major[i * dim + i].norm();
        max_d = max_d.max(m);
        min_d = min_d.min(m);
    }
    if min_d == 0.0 {
        f64::INFINITY
    } else {
        max_d / min_d
    }
}
