//! One quantum dot on a silver nanowire: the textbook resonance line.
//!
//! A lossless emitter reflects the resonant photon perfectly; non-guided
//! loss caps the reflection below one and opens a loss channel.
//!
//! ```text
//! cargo run -p wqed --example single_emitter
//! ```

use wqed::analysis::{find_features, sweep_spectrum};
use wqed::ddi::DdiMatrix;
use wqed::scattering::single_emitter;
use wqed::types::{validate_chain, Detuning};

fn main() {
    // Rates for a dot 17 nm from the wire, in units of Gamma0.
    let (gamma_wg, gamma_loss) = (11.03, 6.86);

    println!("single emitter, Gamma = {gamma_wg}, Gamma' = {gamma_loss} (units of Gamma0)\n");
    println!("{:>10} {:>10} {:>10} {:>10}", "delta", "R", "T", "loss");
    for delta in [-40.0, -10.0, 0.0, 10.0, 40.0] {
        let res = single_emitter(Detuning(delta), gamma_wg, gamma_loss);
        println!(
            "{delta:>10.2} {:>10.4} {:>10.4} {:>10.4}",
            res.reflection(),
            res.transmission(),
            res.loss_fraction()
        );
    }

    // On resonance the lossless emitter is a perfect mirror.
    let lossless = single_emitter(Detuning(0.0), gamma_wg, 0.0);
    println!("\nlossless on resonance: R = {}", lossless.reflection());

    // Full width at half maximum of the lossless line is 2*Gamma.
    let config = validate_chain(wqed::cli::preset("single-17nm").unwrap()).unwrap();
    let mut lossless_config = config;
    lossless_config.emitters[0].gamma_loss = 0.0;
    let spectrum =
        sweep_spectrum(&lossless_config, &DdiMatrix::zeros(1), -60.0, 60.0, 6001).unwrap();
    let features = find_features(&spectrum, 0.5).unwrap();
    println!(
        "swept FWHM = {:.3} Gamma0 (expected {:.3})",
        features.bandwidth,
        2.0 * gamma_wg
    );
}
