//! Reading the dipole-dipole coupling strength off a measured spectrum.
//!
//! The Fano minimum of a symmetric pair sits at Δ = −Γ tan kl − Ω sec kl,
//! so a swept spectrum plus the known Γ and kl invert to an estimate of Ω:
//! Ω = −Δ_min cos kl − Γ sin kl.
//!
//! ```text
//! cargo run -p wqed --example fano_estimate
//! ```

use wqed::analysis::{estimate_ddi_from_fano, find_features, sweep_spectrum};
use wqed::ddi::build_ddi_matrix;
use wqed::scattering::gap_phases;
use wqed::types::{validate_chain, Detuning};

fn main() {
    let config = validate_chain(wqed::cli::preset("fig2-close").unwrap()).unwrap();
    let ddi = build_ddi_matrix(&config).unwrap();
    let true_omega = ddi.get(0, 1);
    let kl = gap_phases(&config)[0].kl;
    let gamma = config.emitters[0].gamma_wg;

    for (label, gamma_loss) in [("lossless", 0.0), ("lossy (Gamma' = 6.86)", 6.86)] {
        let mut c = config.clone();
        for e in &mut c.emitters {
            e.gamma_loss = gamma_loss;
        }
        // The Fano dip of this geometry sits on the negative-detuning side.
        let spectrum = sweep_spectrum(&c, &ddi, -80.0, 0.0, 16_001).unwrap();
        let features = find_features(&spectrum, 0.5).unwrap();
        let fano = features
            .minima
            .iter()
            .min_by(|a, b| a.reflection.total_cmp(&b.reflection))
            .expect("spectrum has an interior minimum");
        let estimate = estimate_ddi_from_fano(Detuning(fano.delta), gamma, kl).unwrap();
        println!(
            "{label}: minimum at delta = {:.4}, estimate = {estimate:.4}, \
             true omega = {true_omega:.4} ({:+.2}%)",
            fano.delta,
            (estimate / true_omega - 1.0) * 100.0
        );
    }
    println!("\nnon-guided loss shifts the minimum slightly and biases the estimate;");
    println!("the inversion is exact for a lossless pair.");
}
