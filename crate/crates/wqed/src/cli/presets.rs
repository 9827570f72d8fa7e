//! Built-in parameter sets for the reference quantum-dot/silver-nanowire
//! system (λ_qd = 655 nm, λ_sp = 211.8 nm, dipoles along −y).
//!
//! Rates are the documented values for dots held 17 nm or 37 nm from the
//! wire surface; the preset names are the historical labels of these
//! parameter sets.

use crate::types::{ChainConfig, DipoleOrientation, Emitter, WaveguideParams};

pub const PRESET_NAMES: [&str; 9] = [
    "fig2-close",
    "fig4-quarter",
    "fig4-half",
    "fig5-diag",
    "fig5-stacked",
    "fig6-n5",
    "fig8-n5",
    "single-17nm",
    "single-37nm",
];

const LAMBDA_SP: f64 = 211.8;
const LAMBDA_QD: f64 = 655.0;

/// Rates at 17 nm from the wire: Γ = 11.03 Γ0, Γ' = 6.86 Γ0.
const NEAR: (f64, f64) = (11.03, 6.86);
/// Rates at 37 nm from the wire: Γ = 1.06 Γ0, Γ' = 1.26 Γ0.
const FAR: (f64, f64) = (1.06, 1.26);
/// Rates at ~50 nm from the wire: Γ = 0.33 Γ0, Γ' = 1.12 Γ0.
const STACKED_TOP: (f64, f64) = (0.33, 1.12);

fn base(emitters: Vec<Emitter>) -> ChainConfig {
    ChainConfig {
        emitters,
        waveguide: WaveguideParams {
            lambda_guided: LAMBDA_SP,
            lambda_transition: LAMBDA_QD,
            propagation_axis: [1.0, 0.0, 0.0],
        },
        dipole: DipoleOrientation::default(),
        ddi_enabled: true,
        ddi_override: None,
    }
}

fn pair(x2: f64, y2: f64, rates2: (f64, f64)) -> ChainConfig {
    base(vec![
        Emitter::new([0.0, 17.0, 0.0], NEAR.0, NEAR.1),
        Emitter::new([x2, y2, 0.0], rates2.0, rates2.1),
    ])
}

fn chain_of_five(gap: f64) -> ChainConfig {
    base(
        (0..5)
            .map(|j| Emitter::new([gap * j as f64, 17.0, 0.0], NEAR.0, NEAR.1))
            .collect(),
    )
}

/// Returns the named preset, or `None` for unknown names (see
/// [`PRESET_NAMES`]).
pub fn preset(name: &str) -> Option<ChainConfig> {
    let config = match name {
        // Two close identical dots, gap λ_qd/20 = 32.75 nm (kl ≈ 0.31π).
        "fig2-close" => pair(32.75, 17.0, NEAR),
        // Gap λ_sp/4 = 52.95 nm (kl = π/2).
        "fig4-quarter" => pair(52.95, 17.0, NEAR),
        // Gap λ_sp/2 = 105.9 nm (kl = π).
        "fig4-half" => pair(105.9, 17.0, NEAR),
        // Asymmetric couplings, diagonal offset (kl = 0.19π).
        "fig5-diag" => pair(20.0, 37.0, FAR),
        // Stacked dots, zero axis separation (kl = 0).
        "fig5-stacked" => pair(0.0, 49.75, STACKED_TOP),
        // Five dots, gap 32.75 nm.
        "fig6-n5" => chain_of_five(32.75),
        // Same five-dot template; intended for (Δ, kl) maps.
        "fig8-n5" => chain_of_five(32.75),
        "single-17nm" => base(vec![Emitter::new([0.0, 17.0, 0.0], NEAR.0, NEAR.1)]),
        "single-37nm" => base(vec![Emitter::new([0.0, 37.0, 0.0], FAR.0, FAR.1)]),
        _ => return None,
    };
    Some(config)
}
