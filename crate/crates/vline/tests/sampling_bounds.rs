//! Cross-module checks tying the measured reconstruction error to the
//! coefficient tail and the closed-form bound.

use vline::bounds::full_bound;
use vline::lattice::SpectrumSet;
use vline::phantom::{GaussianComponent, Geometry, Phantom};
use vline::sampler::{sup_error, SampledData};
use vline::scheme::{interlaced_scheme, standard_scheme};
use vline::spectrum::{build_table, tail_max, CoeffMethod, Resolution};

fn phantom() -> Phantom {
    Phantom::new(
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
            GaussianComponent {
                center: [0.05, -0.3],
                width: 0.09,
                amplitude: 0.6,
            },
        ],
        1.0,
    )
    .unwrap()
}

#[test]
fn sup_error_is_within_twice_the_tail_sum() {
    // the sampling-series error is controlled by twice the coefficient mass
    // outside K; the window is widened in m so the observed tail carries
    // essentially all of it
    let p = phantom();
    let geom = Geometry::new(1.5, 1.0, 5.0, 5.0 / 6.0).unwrap();
    let k_set = SpectrumSet::from_geometry(&geom);
    let table = build_table(
        &p,
        geom.r,
        22,
        60,
        CoeffMethod::Direct,
        &Resolution::default(),
    )
    .unwrap();
    let tail = tail_max(&table, &k_set).unwrap();
    for scheme in [standard_scheme(&geom).unwrap(), interlaced_scheme(&geom).unwrap()] {
        let data = SampledData::sample(&p, &scheme.lattice, &geom);
        let err = sup_error(&data, &k_set, &p, 64).unwrap();
        assert!(
            err <= 2.0 * tail.sum_outside + 1e-5,
            "{:?}: sup error {err:.4e} vs twice tail {:.4e}",
            scheme.kind,
            2.0 * tail.sum_outside
        );
    }
}

#[test]
fn tail_sum_is_within_the_closed_form_bound() {
    // the bound dominates twice the windowed tail sum, which is itself a
    // truncation of the quantity the bound controls
    let p = phantom();
    let geom = Geometry::new(1.5, 1.0, 5.0, 5.0 / 6.0).unwrap();
    let k_set = SpectrumSet::from_geometry(&geom);
    let table = build_table(
        &p,
        geom.r,
        22,
        60,
        CoeffMethod::Direct,
        &Resolution::default(),
    )
    .unwrap();
    let tail = tail_max(&table, &k_set).unwrap();
    let bound = full_bound(&p, &geom).unwrap();
    assert!(
        2.0 * tail.sum_outside <= bound.total + 1e-6,
        "tail {:.4e} vs bound {:.4e}",
        2.0 * tail.sum_outside,
        bound.total
    );
    // the widened window really does capture the tail: the edge shell sits
    // more than two orders of magnitude below the tail peak
    assert!(tail.edge_to_peak < 1e-2, "edge/peak {}", tail.edge_to_peak);
}

#[test]
fn conservative_mode_also_reconstructs() {
    use vline::scheme::{standard_scheme_opts, SchemeOptions};
    let p = phantom();
    let geom = Geometry::new(1.5, 1.0, 5.0, 5.0 / 6.0).unwrap();
    let k_set = SpectrumSet::from_geometry(&geom);
    let opts = SchemeOptions {
        conservative_n_phi: true,
    };
    let dense = standard_scheme_opts(&geom, opts).unwrap();
    let plain = standard_scheme(&geom).unwrap();
    assert!(dense.n_phi > 3 * plain.n_phi);
    let data_dense = SampledData::sample(&p, &dense.lattice, &geom);
    let data_plain = SampledData::sample(&p, &plain.lattice, &geom);
    let e_dense = sup_error(&data_dense, &k_set, &p, 32).unwrap();
    let e_plain = sup_error(&data_plain, &k_set, &p, 32).unwrap();
    // denser vertex sampling cannot hurt
    assert!(e_dense <= e_plain + 1e-9);
}
