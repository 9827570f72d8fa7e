//! Reflection as a function of detuning and inter-emitter phase, with and
//! without dipole-dipole coupling, written as plot-ready long-form CSV.
//!
//! For every phase kl the five emitters are repositioned (gap = kl·λ_sp/2π)
//! and the geometric couplings are recomputed for the new distances.
//!
//! ```text
//! cargo run -p wqed --example reflection_map
//! ```

use std::io::Write;

use wqed::analysis::{sweep_map, uniform_grid};
use wqed::types::validate_chain;

const PI: f64 = std::f64::consts::PI;

fn main() {
    let config = validate_chain(wqed::cli::preset("fig8-n5").unwrap()).unwrap();
    let deltas = uniform_grid(-80.0, 80.0, 161).unwrap();
    let kls = uniform_grid(0.15 * PI, 2.0 * PI, 38).unwrap();

    let with_ddi = sweep_map(&config, &deltas, &kls, true).unwrap();
    let without = sweep_map(&config, &deltas, &kls, false).unwrap();

    let out = std::env::temp_dir().join("wqed-reflection-map.csv");
    let mut file = std::fs::File::create(&out).unwrap();
    writeln!(file, "kl,delta,reflection_ddi,reflection_noddi").unwrap();
    for (i, &kl) in with_ddi.kl.iter().enumerate() {
        for (j, &delta) in with_ddi.deltas.iter().enumerate() {
            writeln!(
                file,
                "{kl},{delta},{},{}",
                with_ddi.reflection[i][j], without.reflection[i][j]
            )
            .unwrap();
        }
    }
    println!(
        "wrote {} ({} rows)",
        out.display(),
        kls.len() * deltas.len()
    );

    // Where does the coupling matter? Track the per-row worst difference.
    println!("\n{:>8} {:>12} {:>14}", "kl/pi", "max |dR|", "width R>=0.5");
    for (i, &kl) in with_ddi.kl.iter().enumerate() {
        let max_diff = with_ddi.reflection[i]
            .iter()
            .zip(&without.reflection[i])
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        let width = with_ddi.reflection[i].iter().filter(|&&r| r >= 0.5).count();
        if i % 4 == 0 {
            println!("{:>8.3} {:>12.4} {:>14}", kl / PI, max_diff, width);
        }
    }
    println!("\nthe coupling dominates below kl ~ pi/2 and fades toward kl = pi and beyond.");
}
