//! Checks the projection-slice identity: the 1D Fourier transform of a
//! Radon projection equals sqrt(2 pi) times the radial slice of the 2D
//! Fourier transform.
//!
//! ```bash
//! cargo run --release --example projection_slice
//! ```

use vline::phantom::{GaussianComponent, Phantom};
use vline::transform::slice_check;

fn main() {
    let phantom = Phantom::new(
        vec![GaussianComponent {
            center: [0.3, 0.2],
            width: 0.1,
            amplitude: 1.0,
        }],
        1.0,
    )
    .unwrap();

    let mut worst = 0.0_f64;
    println!("{:>8} {:>8} {:>26} {:>26}", "phi", "sigma", "projection transform", "2D slice");
    for i in 0..6 {
        let phi = 2.0 * std::f64::consts::PI * i as f64 / 6.0;
        for sigma in [-4.0, 0.0, 2.5, 5.0] {
            let (lhs, rhs) = slice_check(&phantom, phi, sigma);
            worst = worst.max((lhs - rhs).norm());
            println!(
                "{phi:>8.3} {sigma:>8.2} {:>12.8}{:>+12.8}i {:>12.8}{:>+12.8}i",
                lhs.re, lhs.im, rhs.re, rhs.im
            );
        }
    }
    println!("\nlargest two-sided gap: {worst:.3e}");
}
