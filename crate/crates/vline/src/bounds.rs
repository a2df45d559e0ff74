//! Explicit sup-error bound for the sampling series.
//!
//! The building block is the decay envelope
//! `eta(theta, gamma) = gamma theta exp(-(gamma/3)(1 - theta^2)^{3/2})`
//! together with polynomial-in-`1/gamma` amplifications `eta_1, eta_2` and
//! `eta_3 = gamma eta_1 + eta_2`, which majorize the tail sums of the
//! coefficient estimates over the three regions outside the spectrum set.
//! The final bound is
//!
//! ```text
//! ||S g - g||_inf <= (12/pi) eta*(theta, rb) ||f||_L1
//!                    + (4 r^2 / (pi theta^3)) (2b + 1) eps_1(f, b)
//! ```
//!
//! with `eta*` the largest of the three region candidates and `eps_1` the
//! first-moment band tail of the phantom.

use crate::error::{Error, Result};
use crate::phantom::{Geometry, Phantom};

use std::f64::consts::PI;

/// `eta(theta, gamma) = gamma theta exp(-(gamma/3)(1 - theta^2)^{3/2})`.
pub fn eta(theta: f64, gamma: f64) -> Result<f64> {
    if !(theta > 0.0 && theta < 1.0) {
        return Err(Error::domain(format!(
            "eta requires 0 < theta < 1, got {theta}"
        )));
    }
    if !(gamma >= 0.0) {
        return Err(Error::domain(format!("eta requires gamma >= 0, got {gamma}")));
    }
    Ok(gamma * theta * (-(gamma / 3.0) * (1.0 - theta * theta).powf(1.5)).exp())
}

/// The amplified envelopes `(eta_1, eta_2, eta_3)`; `gamma` must be positive
/// because the first two carry a `1/gamma`.
pub fn eta123(theta: f64, gamma: f64) -> Result<(f64, f64, f64)> {
    if !(gamma > 0.0) {
        return Err(Error::domain(format!(
            "eta123 requires gamma > 0, got {gamma}"
        )));
    }
    let base = eta(theta, gamma)?;
    let u = 1.0 - theta * theta;
    let e1 = (3.0 / u.powf(1.5) + 9.0 / u.powi(3) / gamma) * base;
    let e2 = (9.0 / u.powi(3) + 54.0 / u.powf(4.5) / gamma) * base;
    let e3 = gamma * e1 + e2;
    Ok((e1, e2, e3))
}

/// The three candidates inside the max defining `eta*`, and the max itself.
#[derive(Debug, Clone, Copy)]
pub struct EtaStar {
    pub value: f64,
    /// `(2b/theta^2) eta_1(theta, rb/theta)`,
    /// `(1/r) eta_2(theta, rb/theta^2)`,
    /// `(theta/(r^2 - rbar^2)) eta_3(theta, rb/theta^2)`.
    pub candidates: [f64; 3],
}

/// Evaluates `eta*` for a geometry. Requires `rbar = 2 - theta^2 < r`,
/// which [`Geometry`] already guarantees.
pub fn eta_star(geom: &Geometry) -> Result<EtaStar> {
    let rbar = geom.r_bar();
    let denom = geom.r * geom.r - rbar * rbar;
    if !(denom > 0.0) {
        return Err(Error::domain(format!(
            "eta_star requires r > 2 - theta^2, got r = {}, rbar = {rbar}",
            geom.r
        )));
    }
    let th = geom.theta;
    let rb = geom.rb();
    let (e1, _, _) = eta123(th, rb / th)?;
    let (_, e2, e3) = eta123(th, rb / (th * th))?;
    let candidates = [
        (2.0 * geom.b / (th * th)) * e1,
        e2 / geom.r,
        th / denom * e3,
    ];
    Ok(EtaStar {
        value: candidates.iter().fold(0.0_f64, |a, &b| a.max(b)),
        candidates,
    })
}

/// The assembled right-hand side of the sup-error bound.
#[derive(Debug, Clone, Copy)]
pub struct BoundBreakdown {
    pub eta_star: f64,
    pub candidates: [f64; 3],
    /// `(12/pi) eta* ||f||_L1`.
    pub term_f: f64,
    /// `(4 r^2 / (pi theta^3)) (2b + 1) eps_1(f, b)`.
    pub term_tail: f64,
    pub total: f64,
    /// True when `b < 5 / (1 - theta^2)^{3/2}`: the envelopes have not yet
    /// entered their decaying regime and the bound is far from sharp.
    pub below_asymptotic_regime: bool,
    /// True when the L1 norm used is only an upper bound (mixed signs).
    pub l1_is_upper_bound: bool,
}

/// Evaluates the full bound for a phantom and geometry.
pub fn full_bound(p: &Phantom, geom: &Geometry) -> Result<BoundBreakdown> {
    let star = eta_star(geom)?;
    let l1 = p.l1_norm();
    let eps1 = p.band_tail(1.0, geom.b)?;
    let term_f = 12.0 / PI * star.value * l1.value;
    let term_tail =
        4.0 * geom.r * geom.r / (PI * geom.theta.powi(3)) * (2.0 * geom.b + 1.0) * eps1;
    Ok(BoundBreakdown {
        eta_star: star.value,
        candidates: star.candidates,
        term_f,
        term_tail,
        total: term_f + term_tail,
        below_asymptotic_regime: geom.b < 5.0 / (1.0 - geom.theta * geom.theta).powf(1.5),
        l1_is_upper_bound: l1.is_upper_bound,
    })
}
