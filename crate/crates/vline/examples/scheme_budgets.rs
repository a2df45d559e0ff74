//! Compares the sample budgets of the standard and interlaced schemes over
//! a band-limit sweep: the interlaced scheme needs about (1+2t)/(2(1+t)) of
//! the standard measurements, three quarters as the oversampling parameter
//! approaches one.
//!
//! ```bash
//! cargo run --release --example scheme_budgets
//! ```

use vline::phantom::Geometry;
use vline::scheme::{interlaced_scheme, sample_budget, standard_scheme};

fn main() {
    println!(
        "{:>6} {:>6} {:>12} {:>12} {:>9} {:>9}",
        "b", "theta", "M0 standard", "M0 interlaced", "ratio", "target"
    );
    for &(b, theta) in &[
        (5.0, 5.0 / 6.0),
        (10.0, 5.0 / 6.0),
        (20.0, 0.9),
        (50.0, 0.99),
        (100.0, 0.99),
    ] {
        let geom = Geometry::new(1.5, 1.0, b, theta).unwrap();
        let s = standard_scheme(&geom).unwrap();
        let i = interlaced_scheme(&geom).unwrap();
        let m0_s = sample_budget(&s);
        let m0_i = sample_budget(&i);
        let target = (1.0 + 2.0 * theta) / (2.0 * (1.0 + theta));
        println!(
            "{b:>6} {theta:>6.3} {m0_s:>12} {m0_i:>12} {:>9.4} {target:>9.4}",
            m0_i as f64 / m0_s as f64
        );
    }

    // the psi rates behind those budgets approach 4 rb and 3 rb
    let geom = Geometry::new(1.5, 1.0, 10.0, 0.999).unwrap();
    let s = standard_scheme(&geom).unwrap();
    let i = interlaced_scheme(&geom).unwrap();
    println!(
        "\npsi rates at theta -> 1: standard N_psi/(rb) = {:.4}, interlaced = {:.4}",
        s.psi_rate_target(),
        i.psi_rate_target()
    );
}
