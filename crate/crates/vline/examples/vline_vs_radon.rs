//! Evaluates the V-line transform two ways at a handful of vertices: direct
//! ray quadrature against the closed Radon-pair form.
//!
//! ```bash
//! cargo run --release --example vline_vs_radon
//! ```

use vline::phantom::{GaussianComponent, Phantom};
use vline::transform::{vline_direct, vline_via_radon};

fn main() {
    let phantom = Phantom::new(
        vec![
            GaussianComponent {
                center: [0.2, 0.1],
                width: 0.10,
                amplitude: 1.0,
            },
            GaussianComponent {
                center: [-0.35, 0.15],
                width: 0.08,
                amplitude: 0.8,
            },
        ],
        1.0,
    )
    .expect("components fit the support disk");

    let r = 1.5;
    println!("{:>8} {:>8} {:>16} {:>16} {:>12}", "phi", "psi", "ray quadrature", "radon pair", "gap");
    for (phi, psi) in [
        (0.0, 0.05),
        (0.7, 0.20),
        (1.4, 0.35),
        (2.8, 0.50),
        (4.2, 0.65),
        (5.6, 1.10),
    ] {
        let direct = vline_direct(&phantom, phi, psi, r);
        let pair = vline_via_radon(&phantom, phi, psi, r);
        println!(
            "{phi:>8.3} {psi:>8.3} {direct:>16.12} {pair:>16.12} {:>12.2e}",
            (direct - pair).abs()
        );
    }
}
