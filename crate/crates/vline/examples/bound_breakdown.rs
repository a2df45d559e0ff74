//! Evaluates the closed-form sup-error bound over a band-limit sweep and
//! prints the breakdown into the phantom term and the band-tail term.
//!
//! ```bash
//! cargo run --release --example bound_breakdown
//! ```

use vline::bounds::{eta, eta123, full_bound};
use vline::phantom::{GaussianComponent, Geometry, Phantom};

fn main() {
    let theta: f64 = 5.0 / 6.0;
    println!("decay envelope eta(theta = 5/6, gamma):");
    for gamma in [3.0, 6.0, 9.0, 15.0, 30.0] {
        let (e1, e2, e3) = eta123(theta, gamma).unwrap();
        println!(
            "  gamma = {gamma:>4}: eta = {:.4e}  eta1 = {:.4e}  eta2 = {:.4e}  eta3 = {:.4e}",
            eta(theta, gamma).unwrap(),
            e1,
            e2,
            e3
        );
    }

    let phantom = Phantom::new(
        vec![GaussianComponent {
            center: [0.0, 0.0],
            width: 0.15,
            amplitude: 1.0,
        }],
        1.0,
    )
    .unwrap();

    println!(
        "\n{:>5} {:>13} {:>13} {:>13} {:>6}",
        "b", "phantom term", "tail term", "total", "loose"
    );
    let mut best = (f64::INFINITY, 0.0);
    for i in 0..8 {
        let b = 5.0 + 5.0 * i as f64;
        let geom = Geometry::new(1.5, 1.0, b, theta).unwrap();
        let bb = full_bound(&phantom, &geom).unwrap();
        if bb.total < best.0 {
            best = (bb.total, b);
        }
        println!(
            "{b:>5} {:>13.4e} {:>13.4e} {:>13.4e} {:>6}",
            bb.term_f,
            bb.term_tail,
            bb.total,
            if bb.below_asymptotic_regime { "yes" } else { "no" }
        );
    }
    println!("\nsmallest bound in the sweep: {:.4e} at b = {}", best.0, best.1);
}
