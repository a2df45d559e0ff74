//! Samples the V-line data of a phantom on the standard lattice,
//! reconstructs it with the sampling series and reports the sup error
//! against the coefficient tail and the closed-form bound.
//!
//! ```bash
//! cargo run --release --example sampling_reconstruction
//! ```

use vline::bounds::full_bound;
use vline::lattice::SpectrumSet;
use vline::phantom::{GaussianComponent, Geometry, Phantom};
use vline::sampler::{reconstruct, sup_error, SampledData};
use vline::scheme::standard_scheme;
use vline::spectrum::{build_table, tail_max, CoeffMethod, Resolution};
use vline::transform::g_extended;

fn main() {
    let phantom = Phantom::new(
        vec![
            GaussianComponent {
                center: [0.2, 0.1],
                width: 0.10,
                amplitude: 1.0,
            },
            GaussianComponent {
                center: [0.05, -0.3],
                width: 0.09,
                amplitude: 0.6,
            },
        ],
        1.0,
    )
    .unwrap();
    let geom = Geometry::new(1.5, 1.0, 5.0, 5.0 / 6.0).unwrap();
    let k_set = SpectrumSet::from_geometry(&geom);
    let scheme = standard_scheme(&geom).unwrap();
    println!(
        "standard scheme: N_phi = {}, N_psi = {} ({} nodes, {} measured)",
        scheme.n_phi,
        scheme.n_psi,
        scheme.n_phi * scheme.n_psi,
        vline::scheme::sample_budget(&scheme)
    );

    let data = SampledData::sample(&phantom, &scheme.lattice, &geom);

    // pointwise look at the series against the data it interpolates
    println!("\n{:>8} {:>8} {:>14} {:>14}", "phi", "psi", "series", "reference");
    for (phi, psi) in [(0.3, 0.1), (1.1, 0.25), (2.0, 0.45), (3.3, 0.6)] {
        let s = reconstruct(&data, &k_set, phi, psi).unwrap();
        let g = g_extended(&phantom, phi, psi, geom.r);
        println!("{phi:>8.3} {psi:>8.3} {s:>14.8} {g:>14.8}");
    }

    let err = sup_error(&data, &k_set, &phantom, 128).unwrap();
    let table = build_table(
        &phantom,
        geom.r,
        22,
        60,
        CoeffMethod::Direct,
        &Resolution::default(),
    )
    .unwrap();
    let tail = tail_max(&table, &k_set).unwrap();
    let bound = full_bound(&phantom, &geom).unwrap();
    println!("\nsup error on a 128x128 grid : {err:.4e}");
    println!("twice the coefficient tail  : {:.4e}", 2.0 * tail.sum_outside);
    println!("closed-form bound           : {:.4e}", bound.total);
}
