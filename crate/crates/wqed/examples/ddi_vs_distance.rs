//! Dipole-dipole coupling versus emitter separation.
//!
//! The near field falls off as 1/x³, so the coupling collapses from tens of
//! Γ0 at a few tens of nanometers to a fraction of Γ0 beyond ~100 nm. The
//! sign depends on the angle between the separation and the dipole axis.
//!
//! ```text
//! cargo run -p wqed --example ddi_vs_distance
//! ```

use wqed::ddi::pair_ddi;
use wqed::types::DipoleOrientation;

fn main() {
    let dipole = DipoleOrientation::default(); // along -y
    let lambda = 655.0;

    println!("separation along x (perpendicular to the dipole):");
    println!("{:>10} {:>12}", "L (nm)", "omega/Gamma0");
    for &gap in &[32.75, 52.95, 65.5, 98.25, 105.9, 131.0, 160.0, 211.8, 240.0] {
        let omega = pair_ddi([0.0, 17.0, 0.0], [gap, 17.0, 0.0], lambda, &dipole).unwrap();
        println!("{gap:>10.2} {omega:>12.4}");
    }

    println!("\nseparation along y (parallel to the dipole): opposite sign, twice the");
    println!("near-field weight:");
    println!("{:>10} {:>12}", "L (nm)", "omega/Gamma0");
    for &gap in &[32.75, 52.95, 105.9] {
        let omega = pair_ddi([0.0, 17.0, 0.0], [0.0, 17.0 + gap, 0.0], lambda, &dipole).unwrap();
        println!("{gap:>10.2} {omega:>12.4}");
    }

    let diag = pair_ddi([0.0, 17.0, 0.0], [20.0, 37.0, 0.0], lambda, &dipole).unwrap();
    println!("\ndiagonal offset (20, 20) nm mixes both terms: omega = {diag:.4} Gamma0");
}
