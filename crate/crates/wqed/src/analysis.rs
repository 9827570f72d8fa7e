//! Spectrum sweeps, spectral-feature extraction, coupling estimation from the
//! Fano minimum, and 2D (detuning, phase) reflection maps.

use rayon::prelude::*;
use thiserror::Error;

use crate::ddi::{build_ddi_matrix, DdiError, DdiMatrix};
use crate::scattering::{solve_chain, SolveError};
use crate::types::{ChainConfig, Detuning};

/// Reflection/transmission spectrum on a monotonically increasing detuning
/// grid. All columns share the grid length; `loss = 1 − R − T`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub deltas: Vec<f64>,
    pub reflection: Vec<f64>,
    pub transmission: Vec<f64>,
    pub loss: Vec<f64>,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.deltas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.deltas.is_empty()
    }
}

/// One refined local extremum of the reflection curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremum {
    pub delta: f64,
    pub reflection: f64,
}

/// Peaks, minima, and the high-reflection bandwidth of a spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralFeatures {
    /// Interior local maxima, in grid order, positions refined by 3-point
    /// parabolic interpolation.
    pub peaks: Vec<Extremum>,
    /// Interior local minima, refined the same way.
    pub minima: Vec<Extremum>,
    /// Width (in `Γ0`) of the contiguous region around the highest peak where
    /// `R ≥ threshold`; 0 when `no_peak` is set.
    pub bandwidth: f64,
    /// The reflection level the bandwidth was measured at.
    pub threshold: f64,
    /// Set when no interior peak reaches the threshold, leaving the
    /// bandwidth undefined (reported as 0).
    pub no_peak: bool,
}

/// Analytic lossless feature positions for two identical coupled emitters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoEmitterPrediction {
    /// The pair of perfect-reflection detunings `±√(2ΓΩ sin kl + Ω²)`,
    /// absent when the radicand is negative.
    pub rmax: Option<[f64; 2]>,
    /// The reflection zero `−Γ tan kl − Ω sec kl`.
    pub rmin: f64,
    /// `sin kl = 0`: numerator and denominator share a zero, so the spectrum
    /// is a single shifted peak rather than a split pair.
    pub shift_only: bool,
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum AnalysisError {
    #[error("spectrum contains no samples")]
    EmptySpectrum,
    #[error("threshold {0} outside (0, 1)")]
    InvalidThreshold(f64),
    #[error("grid invalid: {0}")]
    InvalidGrid(String),
    #[error("kl = {kl} is within {tol} of π/2 (mod π); feature position diverges")]
    SingularPhase { kl: f64, tol: f64 },
    #[error("map template must have uniform gaps (found {found} nm vs {expected} nm)")]
    NonUniformTemplate { expected: f64, found: f64 },
    #[error("solver failed at delta = {delta}: {source}")]
    SolveAt { delta: f64, source: SolveError },
    #[error(transparent)]
    Ddi(#[from] DdiError),
}

/// `|cos kl|` below this counts as hitting the singular phase π/2 (mod π).
const SINGULAR_PHASE_TOL: f64 = 1e-12;

/// Uniform inclusive grid with `n ≥ 2` points.
pub fn uniform_grid(min: f64, max: f64, n: usize) -> Result<Vec<f64>, AnalysisError> {
    if !(min.is_finite() && max.is_finite() && min < max) {
        return Err(AnalysisError::InvalidGrid(format!("bounds [{min}, {max}]")));
    }
    if n < 2 {
        return Err(AnalysisError::InvalidGrid(format!(
            "{n} points (need at least 2)"
        )));
    }
    let step = (max - min) / (n - 1) as f64;
    Ok((0..n).map(|i| min + step * i as f64).collect())
}

/// Sweeps `solve_chain` over a uniform detuning grid.
///
/// Points are evaluated in parallel and assembled in grid order, so the
/// output is deterministic for identical inputs.
pub fn sweep_spectrum(
    config: &ChainConfig,
    ddi: &DdiMatrix,
    delta_min: f64,
    delta_max: f64,
    n_points: usize,
) -> Result<Spectrum, AnalysisError> {
    let deltas = uniform_grid(delta_min, delta_max, n_points)?;
    sweep_over(config, ddi, &deltas)
}

/// Sweeps an explicit detuning grid.
pub fn sweep_over(
    config: &ChainConfig,
    ddi: &DdiMatrix,
    deltas: &[f64],
) -> Result<Spectrum, AnalysisError> {
    let rows: Vec<(f64, f64)> = deltas
        .par_iter()
        .map(|&delta| {
            solve_chain(config, ddi, Detuning(delta))
                .map(|res| (res.reflection(), res.transmission()))
                .map_err(|source| AnalysisError::SolveAt { delta, source })
        })
        .collect::<Result<_, _>>()?;
    let reflection: Vec<f64> = rows.iter().map(|&(r, _)| r).collect();
    let transmission: Vec<f64> = rows.iter().map(|&(_, t)| t).collect();
    let loss = reflection
        .iter()
        .zip(&transmission)
        .map(|(r, t)| 1.0 - r - t)
        .collect();
    Ok(Spectrum {
        deltas: deltas.to_vec(),
        reflection,
        transmission,
        loss,
    })
}

/// Extracts interior extrema and the high-reflection bandwidth.
///
/// Extrema come from sign changes of discrete differences, each refined by a
/// parabola through the three bracketing samples. The bandwidth is measured
/// around the globally highest peak, with threshold crossings located by
/// linear interpolation between samples.
pub fn find_features(
    spectrum: &Spectrum,
    threshold: f64,
) -> Result<SpectralFeatures, AnalysisError> {
    if spectrum.is_empty() {
        return Err(AnalysisError::EmptySpectrum);
    }
    if !(threshold > 0.0 && threshold < 1.0) {
        return Err(AnalysisError::InvalidThreshold(threshold));
    }
    let x = &spectrum.deltas;
    let y = &spectrum.reflection;
    let n = x.len();

    let mut peaks = Vec::new();
    let mut minima = Vec::new();
    let mut best_peak: Option<(usize, Extremum)> = None;
    for i in 1..n.saturating_sub(1) {
        let is_peak = y[i] > y[i - 1] && y[i] > y[i + 1];
        let is_min = y[i] < y[i - 1] && y[i] < y[i + 1];
        if !(is_peak || is_min) {
            continue;
        }
        let refined = parabolic_vertex((x[i - 1], y[i - 1]), (x[i], y[i]), (x[i + 1], y[i + 1]));
        if is_peak {
            peaks.push(refined);
            let better = best_peak
                .map(|(_, cur)| refined.reflection > cur.reflection)
                .unwrap_or(true);
            if better {
                best_peak = Some((i, refined));
            }
        } else {
            minima.push(refined);
        }
    }

    let (bandwidth, no_peak) = match best_peak {
        Some((i, peak)) if peak.reflection >= threshold => {
            (bandwidth_around(x, y, i, threshold), false)
        }
        _ => (0.0, true),
    };

    Ok(SpectralFeatures {
        peaks,
        minima,
        bandwidth,
        threshold,
        no_peak,
    })
}

/// Vertex of the parabola through three points (arbitrary spacing). Falls
/// back to the middle sample when the points are collinear.
fn parabolic_vertex(p0: (f64, f64), p1: (f64, f64), p2: (f64, f64)) -> Extremum {
    let (x0, y0) = p0;
    let (x1, y1) = p1;
    let (x2, y2) = p2;
    let denom = (x0 - x1) * (x0 - x2) * (x1 - x2);
    let a = (x2 * (y1 - y0) + x1 * (y0 - y2) + x0 * (y2 - y1)) / denom;
    let b = (x2 * x2 * (y0 - y1) + x1 * x1 * (y2 - y0) + x0 * x0 * (y1 - y2)) / denom;
    if a.abs() < 1e-300 || !a.is_finite() {
        return Extremum {
            delta: x1,
            reflection: y1,
        };
    }
    let xv = (-b / (2.0 * a)).clamp(x0, x2);
    // Evaluate the same parabola at the vertex (Lagrange form).
    let yv = y0 * (xv - x1) * (xv - x2) / ((x0 - x1) * (x0 - x2))
        + y1 * (xv - x0) * (xv - x2) / ((x1 - x0) * (x1 - x2))
        + y2 * (xv - x0) * (xv - x1) / ((x2 - x0) * (x2 - x1));
    Extremum {
        delta: xv,
        reflection: yv,
    }
}

/// Width of the contiguous `R ≥ threshold` region around sample `i`, with
/// linearly interpolated crossings; truncates at the grid edges.
fn bandwidth_around(x: &[f64], y: &[f64], i: usize, threshold: f64) -> f64 {
    let mut left = x[0];
    for j in (1..=i).rev() {
        if y[j - 1] < threshold {
            left = x[j - 1] + (threshold - y[j - 1]) * (x[j] - x[j - 1]) / (y[j] - y[j - 1]);
            break;
        }
    }
    let mut right = x[x.len() - 1];
    for j in i..x.len() - 1 {
        if y[j + 1] < threshold {
            right = x[j] + (y[j] - threshold) * (x[j + 1] - x[j]) / (y[j] - y[j + 1]);
            break;
        }
    }
    right - left
}

/// Lossless analytic feature positions for a symmetric two-emitter chain:
/// perfect-reflection pair at `±√(2ΓΩ sin kl + Ω²)` (when real) and the
/// reflection zero at `−Γ tan kl − Ω sec kl`.
///
/// The formulas assume `Γ' = 0`; with loss they locate features only
/// approximately. Fails with [`AnalysisError::SingularPhase`] at
/// `kl = π/2 (mod π)` where the zero position diverges.
pub fn predict_two_emitter_features(
    gamma_wg: f64,
    kl: f64,
    omega: f64,
) -> Result<TwoEmitterPrediction, AnalysisError> {
    if kl.cos().abs() < SINGULAR_PHASE_TOL {
        return Err(AnalysisError::SingularPhase {
            kl,
            tol: SINGULAR_PHASE_TOL,
        });
    }
    let radicand = 2.0 * gamma_wg * omega * kl.sin() + omega * omega;
    let rmax = if radicand >= 0.0 {
        let root = radicand.sqrt();
        Some([-root, root])
    } else {
        None
    };
    let rmin = -gamma_wg * kl.tan() - omega / kl.cos();
    Ok(TwoEmitterPrediction {
        rmax,
        rmin,
        shift_only: kl.sin().abs() < SINGULAR_PHASE_TOL,
    })
}

/// Inverts the Fano-minimum position for the coupling strength:
/// `Ω = −Δ_rmin·cos kl − Γ·sin kl`.
///
/// Exact for a lossless symmetric pair; with non-guided loss the swept
/// minimum shifts and the estimate inherits that bias (documented validity
/// caveat: `Γ'` small relative to `Γ`).
pub fn estimate_ddi_from_fano(
    delta_rmin: Detuning,
    gamma_wg: f64,
    kl: f64,
) -> Result<f64, AnalysisError> {
    if kl.cos().abs() < SINGULAR_PHASE_TOL {
        return Err(AnalysisError::SingularPhase {
            kl,
            tol: SINGULAR_PHASE_TOL,
        });
    }
    Ok(-delta_rmin.0 * kl.cos() - gamma_wg * kl.sin())
}

/// Reflection over a (kl, Δ) grid: rows indexed by `kl`, columns by `Δ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReflectionMap {
    pub kl: Vec<f64>,
    pub deltas: Vec<f64>,
    /// `reflection[i][j]` is R at `(kl[i], deltas[j])`.
    pub reflection: Vec<Vec<f64>>,
}

/// Sweeps reflection as a function of detuning and inter-emitter phase.
///
/// The template must have uniform gaps; for every `kl` in the grid the
/// emitters are repositioned along the axis with gap `kl·λ_sp/2π` (transverse
/// offsets preserved) and, when `ddi_enabled`, the geometric coupling matrix
/// is recomputed for the new distances. Emitters whose 3D positions coincide
/// at some `kl` make the geometric coupling diverge and are reported as a
/// [`DdiError::CoincidentEmitters`].
pub fn sweep_map(
    config_template: &ChainConfig,
    delta_grid: &[f64],
    kl_grid: &[f64],
    ddi_enabled: bool,
) -> Result<ReflectionMap, AnalysisError> {
    if delta_grid.is_empty() || kl_grid.is_empty() {
        return Err(AnalysisError::InvalidGrid("empty grid".into()));
    }
    let n = config_template.len();
    let gaps: Vec<f64> = (1..n)
        .map(|j| config_template.axis_projection(j) - config_template.axis_projection(j - 1))
        .collect();
    if let Some((&first, rest)) = gaps.split_first() {
        for &g in rest {
            if (g - first).abs() > 1e-9 * first.abs().max(1.0) {
                return Err(AnalysisError::NonUniformTemplate {
                    expected: first,
                    found: g,
                });
            }
        }
    }

    let lambda_guided = config_template.waveguide.lambda_guided;
    let axis = config_template.waveguide.propagation_axis;
    let anchor = config_template.axis_projection(0);
    let mut rows = Vec::with_capacity(kl_grid.len());
    for &kl in kl_grid {
        let gap = kl * lambda_guided / (2.0 * std::f64::consts::PI);
        let mut config = config_template.clone();
        config.ddi_enabled = ddi_enabled;
        config.ddi_override = None;
        for (j, emitter) in config.emitters.iter_mut().enumerate() {
            let shift = anchor + gap * j as f64 - crate::types::dot3(emitter.position, axis);
            for (coord, &a) in emitter.position.iter_mut().zip(&axis) {
                *coord += shift * a;
            }
        }
        let ddi = if ddi_enabled {
            build_ddi_matrix(&config)?
        } else {
            DdiMatrix::zeros(n)
        };
        let spectrum = sweep_over(&config, &ddi, delta_grid)?;
        rows.push(spectrum.reflection);
    }
    Ok(ReflectionMap {
        kl: kl_grid.to_vec(),
        deltas: delta_grid.to_vec(),
        reflection: rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::{DipoleOrientation, Emitter, WaveguideParams};

    const PI: f64 = std::f64::consts::PI;

    fn single_emitter_chain(gamma_wg: f64, gamma_loss: f64) -> ChainConfig {
        ChainConfig {
            emitters: vec![Emitter::new([0.0, 17.0, 0.0], gamma_wg, gamma_loss)],
            waveguide: WaveguideParams {
                lambda_guided: 211.8,
                lambda_transition: 655.0,
                propagation_axis: [1.0, 0.0, 0.0],
            },
            dipole: DipoleOrientation::default(),
            ddi_enabled: false,
            ddi_override: None,
        }
    }

    #[test]
    fn single_emitter_sweep_is_a_lorentzian() {
        let gamma = 4.0;
        let config = single_emitter_chain(gamma, 0.0);
        let ddi = DdiMatrix::zeros(1);
        let spectrum = sweep_spectrum(&config, &ddi, -10.0, 10.0, 201).unwrap();
        for (i, &delta) in spectrum.deltas.iter().enumerate() {
            let expected = gamma * gamma / (gamma * gamma + delta * delta);
            assert!((spectrum.reflection[i] - expected).abs() < 1e-12);
            assert!(spectrum.loss[i].abs() < 1e-12);
        }
        assert_eq!(spectrum.reflection[100], 1.0); // Δ = 0 on this grid
    }

    #[test]
    fn lorentzian_bandwidth_at_half_maximum_is_twice_gamma() {
        let gamma = 4.0;
        let config = single_emitter_chain(gamma, 0.0);
        let spectrum = sweep_spectrum(&config, &DdiMatrix::zeros(1), -20.0, 20.0, 4001).unwrap();
        let features = find_features(&spectrum, 0.5).unwrap();
        assert_eq!(features.peaks.len(), 1);
        assert!(features.peaks[0].delta.abs() < 1e-9);
        assert!(!features.no_peak);
        assert!(
            (features.bandwidth - 2.0 * gamma).abs() < 1e-3,
            "{}",
            features.bandwidth
        );
    }

    #[test]
    fn monotone_spectrum_has_no_interior_extrema() {
        let spectrum = Spectrum {
            deltas: vec![0.0, 1.0, 2.0, 3.0],
            reflection: vec![0.1, 0.2, 0.3, 0.4],
            transmission: vec![0.9, 0.8, 0.7, 0.6],
            loss: vec![0.0; 4],
        };
        let features = find_features(&spectrum, 0.25).unwrap();
        assert!(features.peaks.is_empty());
        assert!(features.minima.is_empty());
        assert!(features.no_peak);
        assert_eq!(features.bandwidth, 0.0);
    }

    #[test]
    fn empty_spectrum_is_an_error() {
        let spectrum = Spectrum {
            deltas: vec![],
            reflection: vec![],
            transmission: vec![],
            loss: vec![],
        };
        assert!(matches!(
            find_features(&spectrum, 0.5),
            Err(AnalysisError::EmptySpectrum)
        ));
    }

    #[test]
    fn prediction_reference_values() {
        let p = predict_two_emitter_features(11.03, 0.3093 * PI, 23.08).unwrap();
        // Direct evaluation of the closed expressions.
        let kl = 0.3093 * PI;
        let expected_root = (2.0 * 11.03 * 23.08 * kl.sin() + 23.08_f64.powi(2)).sqrt();
        let expected_rmin = -11.03 * kl.tan() - 23.08 / kl.cos();
        let rmax = p.rmax.unwrap();
        assert!((rmax[1] - expected_root).abs() < 1e-12);
        assert!((rmax[0] + expected_root).abs() < 1e-12);
        assert!((p.rmin - expected_rmin).abs() < 1e-12);
        assert!((expected_root - 30.873).abs() < 1e-3);
        assert!((expected_rmin + 57.083).abs() < 1e-3);
        assert!(!p.shift_only);
    }

    #[test]
    fn prediction_zero_omega_degenerates_to_origin() {
        let p = predict_two_emitter_features(11.03, 0.4, 0.0).unwrap();
        let rmax = p.rmax.unwrap();
        assert_eq!(rmax, [0.0, 0.0]);
        assert!((p.rmin + 11.03 * 0.4_f64.tan()).abs() < 1e-12);
    }

    #[test]
    fn prediction_flags_shift_only_at_kl_zero() {
        let p = predict_two_emitter_features(11.03, 0.0, -50.71).unwrap();
        assert!(p.shift_only);
        assert!((p.rmin - 50.71).abs() < 1e-12); // −Ω
        let rmax = p.rmax.unwrap();
        assert!((rmax[1] - 50.71).abs() < 1e-12);
    }

    #[test]
    fn prediction_rejects_quarter_wave_phase() {
        assert!(matches!(
            predict_two_emitter_features(11.03, PI / 2.0, 23.08),
            Err(AnalysisError::SingularPhase { .. })
        ));
    }

    #[test]
    fn estimate_inverts_prediction_exactly() {
        let (gamma, kl, omega) = (11.03, 0.3093 * PI, 23.08);
        let p = predict_two_emitter_features(gamma, kl, omega).unwrap();
        let estimate = estimate_ddi_from_fano(Detuning(p.rmin), gamma, kl).unwrap();
        assert!((estimate - omega).abs() < 1e-10);
    }

    #[test]
    fn estimate_at_kl_zero_is_minus_rmin() {
        let estimate = estimate_ddi_from_fano(Detuning(-23.08), 11.03, 0.0).unwrap();
        assert!((estimate - 23.08).abs() < 1e-14);
    }

    #[test]
    fn map_single_cell_equals_direct_solve() {
        let mut config = single_emitter_chain(11.03, 6.86);
        config
            .emitters
            .push(Emitter::new([32.75, 17.0, 0.0], 11.03, 6.86));
        let map = sweep_map(&config, &[3.0], &[0.9], true).unwrap();
        assert_eq!(map.reflection.len(), 1);
        assert_eq!(map.reflection[0].len(), 1);

        let gap = 0.9 * 211.8 / (2.0 * PI);
        let mut rebuilt = config.clone();
        rebuilt.ddi_enabled = true;
        rebuilt.emitters[1].position = [gap, 17.0, 0.0];
        let ddi = build_ddi_matrix(&rebuilt).unwrap();
        let direct = solve_chain(&rebuilt, &ddi, Detuning(3.0)).unwrap();
        assert!((map.reflection[0][0] - direct.reflection()).abs() < 1e-15);
    }

    #[test]
    fn map_disabled_ddi_equals_zero_override() {
        let mut config = single_emitter_chain(11.03, 6.86);
        config
            .emitters
            .push(Emitter::new([32.75, 17.0, 0.0], 11.03, 6.86));
        let deltas: Vec<f64> = (0..11).map(|i| -10.0 + 2.0 * i as f64).collect();
        let kls = [0.4, 1.1, 2.9];
        let disabled = sweep_map(&config, &deltas, &kls, false).unwrap();

        let mut zeroed = config.clone();
        zeroed.ddi_override = Some(vec![vec![0.0, 0.0], vec![0.0, 0.0]]);
        // Equivalent route: zero coupling through an explicit override.
        let mut by_override = Vec::new();
        for &kl in &kls {
            let gap = kl * 211.8 / (2.0 * PI);
            zeroed.emitters[1].position = [gap, 17.0, 0.0];
            let ddi = build_ddi_matrix(&zeroed).unwrap();
            by_override.push(sweep_over(&zeroed, &ddi, &deltas).unwrap().reflection);
        }
        for (row_a, row_b) in disabled.reflection.iter().zip(&by_override) {
            for (a, b) in row_a.iter().zip(row_b) {
                assert!((a - b).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn map_rejects_non_uniform_template() {
        let mut config = single_emitter_chain(11.03, 6.86);
        config
            .emitters
            .push(Emitter::new([32.75, 17.0, 0.0], 11.03, 6.86));
        config
            .emitters
            .push(Emitter::new([99.0, 17.0, 0.0], 11.03, 6.86));
        assert!(matches!(
            sweep_map(&config, &[0.0], &[0.4], true),
            Err(AnalysisError::NonUniformTemplate { .. })
        ));
    }

    #[test]
    fn map_kl_zero_with_axis_only_template_reports_coincident() {
        let mut config = single_emitter_chain(11.03, 6.86);
        config
            .emitters
            .push(Emitter::new([32.75, 17.0, 0.0], 11.03, 6.86));
        match sweep_map(&config, &[0.0], &[0.0], true) {
            Err(AnalysisError::Ddi(DdiError::CoincidentEmitters { .. })) => {}
            other => panic!("expected CoincidentEmitters, got {other:?}"),
        }
        // Without geometric couplings the stacked geometry is fine.
        assert!(sweep_map(&config, &[0.0], &[0.0], false).is_ok());
    }

    #[test]
    fn map_row_near_third_pi_is_wider_with_coupling() {
        let config = crate::types::validate_chain(crate::cli::preset("fig8-n5").unwrap()).unwrap();
        let deltas: Vec<f64> = (0..161).map(|i| -80.0 + i as f64).collect();
        let kl = [0.3093 * PI];
        let on = sweep_map(&config, &deltas, &kl, true).unwrap();
        let off = sweep_map(&config, &deltas, &kl, false).unwrap();
        let width_on = on.reflection[0].iter().filter(|&&r| r >= 0.5).count();
        let width_off = off.reflection[0].iter().filter(|&&r| r >= 0.5).count();
        assert!(
            width_on > width_off,
            "high-R samples: with coupling {width_on}, without {width_off}"
        );
    }

    #[test]
    fn half_wave_pair_is_barely_affected_by_coupling() {
        // Gap = half the guided wavelength: the residual coupling (~0.6)
        // moves the reflection curve by about a percent at most.
        let config =
            crate::types::validate_chain(crate::cli::preset("fig4-half").unwrap()).unwrap();
        let ddi = crate::ddi::build_ddi_matrix(&config).unwrap();
        let on = sweep_spectrum(&config, &ddi, -80.0, 80.0, 2001).unwrap();
        let off = sweep_spectrum(&config, &DdiMatrix::zeros(2), -80.0, 80.0, 2001).unwrap();
        let max_diff = on
            .reflection
            .iter()
            .zip(&off.reflection)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0_f64, f64::max);
        assert!(max_diff <= 0.02, "max |dR| = {max_diff}");
        assert!(max_diff > 0.0, "curves must differ somewhere");
    }

    #[test]
    fn sweep_error_reports_offending_delta() {
        let config = single_emitter_chain(0.0, 0.0);
        let err = sweep_spectrum(&config, &DdiMatrix::zeros(1), -1.0, 1.0, 3).unwrap_err();
        match err {
            AnalysisError::SolveAt { delta, .. } => assert!((delta - 0.0).abs() <= 1.0),
            other => panic!("expected SolveAt, got {other:?}"),
        }
    }
}
