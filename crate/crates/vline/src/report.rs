//! Deterministic CSV writers.
//!
//! Comma separators, a header row, '.' decimal point, 17 significant digits
//! for floats. Grid orders are fixed, so identical inputs produce
//! byte-identical files.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::bounds::BoundBreakdown;
use crate::error::{Error, Result};
use crate::lattice::{LatticeSpec, SpectrumSet};
use crate::spectrum::FourierTable;

/// 17 significant digits, scientific; round-trips f64 exactly.
pub fn fmt_float(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

/// `phi,psi,value` rows of a function sampled on an n x n grid of
/// `[0, 2pi)^2`, phi-major.
pub fn grid_csv(n: usize, mut f: impl FnMut(f64, f64) -> f64) -> String {
    let tau = 2.0 * std::f64::consts::PI;
    let mut out = String::from("phi,psi,value\n");
    for i in 0..n {
        let phi = tau * i as f64 / n as f64;
        for j in 0..n {
            let psi = tau * j as f64 / n as f64;
            let _ = writeln!(
                out,
                "{},{},{}",
                fmt_float(phi),
                fmt_float(psi),
                fmt_float(f(phi, psi))
            );
        }
    }
    out
}

/// `phi,psi,value,error` rows for a reconstruction against a reference on
/// the half-cell-offset evaluation grid.
pub fn error_grid_csv(
    n: usize,
    mut reconstruction: impl FnMut(f64, f64) -> f64,
    mut reference: impl FnMut(f64, f64) -> f64,
) -> String {
    let tau = 2.0 * std::f64::consts::PI;
    let mut out = String::from("phi,psi,value,error\n");
    for i in 0..n {
        let phi = tau * (i as f64 + 0.5) / n as f64;
        for j in 0..n {
            let psi = tau * (j as f64 + 0.5) / n as f64;
            let s = reconstruction(phi, psi);
            let g = reference(phi, psi);
            let _ = writeln!(
                out,
                "{},{},{},{}",
                fmt_float(phi),
                fmt_float(psi),
                fmt_float(s),
                fmt_float((s - g).abs())
            );
        }
    }
    out
}

/// `k,m,re,im,abs,in_k` rows of a coefficient table.
pub fn table_csv(table: &FourierTable, k_set: &SpectrumSet) -> String {
    let mut out = String::from("k,m,re,im,abs,in_k\n");
    for (k, m, c) in table.entries() {
        let _ = writeln!(
            out,
            "{k},{m},{},{},{},{}",
            fmt_float(c.re),
            fmt_float(c.im),
            fmt_float(c.norm()),
            u8::from(k_set.contains(k, m))
        );
    }
    out
}

/// `j,l,s,t` rows of the coset nodes.
pub fn cosets_csv(spec: &LatticeSpec) -> String {
    let mut out = String::from("j,l,s,t\n");
    for v in spec.cosets() {
        let _ = writeln!(out, "{},{},{},{}", v.j, v.l, fmt_float(v.s), fmt_float(v.t));
    }
    out
}

/// `k,m` rows of the spectrum set members.
pub fn spectrum_set_csv(k_set: &SpectrumSet) -> String {
    let mut out = String::from("k,m\n");
    for &(k, m) in k_set.members() {
        let _ = writeln!(out, "{k},{m}");
    }
    out
}

/// Single-row CSV of a bound breakdown.
pub fn bound_csv(b: &BoundBreakdown) -> String {
    let mut out = String::from(
        "eta_star,candidate_1,candidate_2,candidate_3,term_f,term_tail,total,\
         below_asymptotic_regime,l1_is_upper_bound\n",
    );
    let _ = writeln!(
        out,
        "{},{},{},{},{},{},{},{},{}",
        fmt_float(b.eta_star),
        fmt_float(b.candidates[0]),
        fmt_float(b.candidates[1]),
        fmt_float(b.candidates[2]),
        fmt_float(b.term_f),
        fmt_float(b.term_tail),
        fmt_float(b.total),
        u8::from(b.below_asymptotic_regime),
        u8::from(b.l1_is_upper_bound),
    );
    out
}

/// Human-readable block for a bound breakdown.
pub fn bound_text(b: &BoundBreakdown) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "eta* = {:.6e}", b.eta_star);
    let _ = writeln!(
        out,
        "  candidates: {:.6e}  {:.6e}  {:.6e}",
        b.candidates[0], b.candidates[1], b.candidates[2]
    );
    let _ = writeln!(out, "phantom term  = {:.6e}", b.term_f);
    let _ = writeln!(out, "band-tail term = {:.6e}", b.term_tail);
    let _ = writeln!(out, "total bound    = {:.6e}", b.total);
    if b.below_asymptotic_regime {
        let _ = writeln!(out, "note: b is below the asymptotic regime; the bound is loose");
    }
    if b.l1_is_upper_bound {
        let _ = writeln!(out, "note: mixed-sign amplitudes; the L1 norm is an upper bound");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format_is_17_significant_digits() {
        assert_eq!(fmt_float(0.1), "1.0000000000000001e-1");
        assert_eq!(fmt_float(2.0), "2.0000000000000000e0");
        let v = std::f64::consts::PI;
        assert_eq!(fmt_float(v).parse::<f64>().unwrap(), v);
    }

    #[test]
    fn grid_csv_shape_and_header() {
        let csv = grid_csv(4, |a, b| a + b);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "phi,psi,value");
        assert_eq!(lines.len(), 17);
    }

    #[test]
    fn csv_output_is_deterministic() {
        let a = grid_csv(8, |x, y| (x * y).sin());
        let b = grid_csv(8, |x, y| (x * y).sin());
        assert_eq!(a, b);
    }
}
