//! Direct dipole-dipole interaction (DDI) strengths from 3D geometry.
//!
//! The coupling between a pair of identical dipoles separated by `r` is
//!
//! ```text
//! Ω = (3/4) Γ0 [ (cos x / x³ + sin x / x² − cos x / x)
//!              + cos²θ (cos x / x − 3 cos x / x³ − 3 sin x / x²) ]
//! ```
//!
//! with `x = (ω_A/c)·|r| = 2π|r|/λ_transition` and `θ` the angle between the
//! dipole direction and the separation vector. Note that `x` is built from
//! the free-space transition wavelength, not the guided-mode wavelength: the
//! guided mode mediates its own emitter-emitter interaction, which emerges
//! from the scattering equations and is deliberately not folded into `Ω`.

use thiserror::Error;

use crate::types::{dot3, norm3, sub3, ChainConfig, DipoleOrientation};

/// Emitter pairs closer than this (in nm) are rejected: the near-field terms
/// diverge and the point-dipole model is meaningless there.
pub const MIN_SEPARATION_NM: f64 = 1e-9;

/// Symmetric N×N matrix of pairwise couplings `Ω_ij` in units of `Γ0`,
/// with zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct DdiMatrix {
    n: usize,
    omega: Vec<f64>,
}

impl DdiMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            omega: vec![0.0; n * n],
        }
    }

    /// Builds a matrix from rows, enforcing shape, symmetry, and zero
    /// diagonal. Rows are `Ω_ij` in units of `Γ0`.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, DdiError> {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(DdiError::BadShape {
                    expected: n,
                    found: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if i == j && v != 0.0 {
                    return Err(DdiError::BadShape {
                        expected: n,
                        found: n,
                    });
                }
                m.omega[i * n + j] = v;
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if m.get(i, j) != m.get(j, i) {
                    return Err(DdiError::Asymmetric { i, j });
                }
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.omega[i * self.n + j]
    }

    fn set_pair(&mut self, i: usize, j: usize, value: f64) {
        self.omega[i * self.n + j] = value;
        self.omega[j * self.n + i] = value;
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum DdiError {
    #[error(
        "emitters {i} and {j} are closer than {MIN_SEPARATION_NM} nm \
         (separation {separation_nm} nm); the dipole-dipole coupling diverges"
    )]
    CoincidentEmitters {
        i: usize,
        j: usize,
        separation_nm: f64,
    },
    #[error("coupling matrix must be square with zero diagonal ({expected} rows, found {found})")]
    BadShape { expected: usize, found: usize },
    #[error("coupling matrix asymmetric at ({i},{j})")]
    Asymmetric { i: usize, j: usize },
}

/// Coupling `Ω` between dipoles at `r_i` and `r_j`, in units of `Γ0`.
///
/// Fails with [`DdiError::CoincidentEmitters`] when the separation is below
/// [`MIN_SEPARATION_NM`]; clamping would silently corrupt spectra, so the
/// divergence is a hard error.
pub fn pair_ddi(
    r_i: [f64; 3],
    r_j: [f64; 3],
    lambda_transition: f64,
    dipole: &DipoleOrientation,
) -> Result<f64, DdiError> {
    let sep = sub3(r_i, r_j);
    let dist = norm3(sep);
    if dist < MIN_SEPARATION_NM {
        return Err(DdiError::CoincidentEmitters {
            i: 0,
            j: 1,
            separation_nm: dist,
        });
    }
    let x = 2.0 * std::f64::consts::PI * dist / lambda_transition;
    let p_norm = norm3(dipole.direction);
    let cos_theta = dot3(dipole.direction, sep) / (p_norm * dist);
    let cos2 = cos_theta * cos_theta;

    let (sin_x, cos_x) = x.sin_cos();
    let perp = cos_x / x.powi(3) + sin_x / x.powi(2) - cos_x / x;
    let axial = cos_x / x - 3.0 * cos_x / x.powi(3) - 3.0 * sin_x / x.powi(2);
    Ok(0.75 * (perp + cos2 * axial))
}

/// Pairwise coupling matrix for a validated chain.
///
/// Resolution order: an explicit `ddi_override` is returned verbatim; with
/// `ddi_enabled == false` the zero matrix is returned; otherwise every
/// unordered pair is filled via [`pair_ddi`]. Each pair enters the scattering
/// equations exactly once per emitter equation.
pub fn build_ddi_matrix(config: &ChainConfig) -> Result<DdiMatrix, DdiError> {
    let n = config.emitters.len();
    if let Some(rows) = &config.ddi_override {
        return DdiMatrix::from_rows(rows);
    }
    if !config.ddi_enabled {
        return Ok(DdiMatrix::zeros(n));
    }
    let mut m = DdiMatrix::zeros(n);
    for i in 0..n {
        for j in (i + 1)..n {
            let omega = pair_ddi(
                config.emitters[i].position,
                config.emitters[j].position,
                config.waveguide.lambda_transition,
                &config.dipole,
            )
            .map_err(|e| match e {
                DdiError::CoincidentEmitters { separation_nm, .. } => {
                    DdiError::CoincidentEmitters {
                        i,
                        j,
                        separation_nm,
                    }
                }
                other => other,
            })?;
            m.set_pair(i, j, omega);
        }
    }
    Ok(m)
}
