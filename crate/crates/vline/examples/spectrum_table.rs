//! Builds Fourier-coefficient tables of the V-line data by both routes
//! (grid transform of g against the frequency-domain Bessel form) and
//! prints a slice with the spectrum-set membership.
//!
//! ```bash
//! cargo run --release --example spectrum_table
//! ```

use vline::lattice::SpectrumSet;
use vline::phantom::{GaussianComponent, Geometry, Phantom};
use vline::spectrum::{build_table, default_sigma_max, tail_max, CoeffMethod, Resolution};

fn main() {
    let phantom = Phantom::new(
        vec![GaussianComponent {
            center: [0.2, 0.1],
            width: 0.12,
            amplitude: 1.0,
        }],
        1.0,
    )
    .unwrap();
    let geom = Geometry::new(1.5, 1.0, 5.0, 5.0 / 6.0).unwrap();
    let k_set = SpectrumSet::from_geometry(&geom);

    let res = Resolution {
        grid_n: 1024,
        sigma_max: default_sigma_max(&phantom, geom.b),
        alpha_n: 128,
    };
    let kw = 8;
    let direct = build_table(&phantom, geom.r, kw, kw, CoeffMethod::Direct, &res).unwrap();
    let bessel = build_table(&phantom, geom.r, kw, kw, CoeffMethod::Bessel, &res).unwrap();

    println!("|K| = {} members, diamond radius rb = {}", k_set.len(), geom.rb());
    println!(
        "{:>4} {:>4} {:>14} {:>14} {:>10} {:>5}",
        "k", "m", "|direct|", "|bessel|", "gap", "in K"
    );
    let mut worst = 0.0_f64;
    for k in [-6_i64, -3, 0, 2, 5] {
        for m in [0_i64, 1, 4, 7] {
            let d = direct.get(k, m);
            let b = bessel.get(k, m);
            worst = worst.max((d - b).norm());
            println!(
                "{k:>4} {m:>4} {:>14.6e} {:>14.6e} {:>10.2e} {:>5}",
                d.norm(),
                b.norm(),
                (d - b).norm(),
                if k_set.contains(k, m) { "yes" } else { "no" }
            );
        }
    }
    println!("\nmax cross-method gap on the printed slice: {worst:.3e}");

    // tail report against a small inner frequency set that the window covers
    let inner = SpectrumSet::new(1.5, 1.2, 0.9);
    let tail = tail_max(&direct, &inner).unwrap();
    println!(
        "tail outside the inner spectrum set: max {:.3e}, sum {:.3e}",
        tail.max_outside, tail.sum_outside
    );
}
