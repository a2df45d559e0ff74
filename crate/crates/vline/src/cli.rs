//! Driver commands behind the `vline` binary.
//!
//! Each command loads a [`RunConfig`], runs the corresponding pipeline and
//! writes CSV (plus a text summary where useful) under the configured output
//! directory. Exit-code policy of the binary: 0 on success, 2 when a
//! measured sup error exceeds the theoretical bound, 3 on configuration or
//! precondition failures.

use std::path::PathBuf;

use crate::bounds::full_bound;
use crate::config::{RunConfig, SchemeSelection};
use crate::error::{Error, Result};
use crate::lattice::{find_overlapping_translate, LatticeSpec, SpectrumSet};
use crate::report;
use crate::sampler::{reconstruct, sup_error, SampledData};
use crate::scheme::{
    interlaced_scheme_opts, sample_budget, standard_scheme_opts, SchemeKind, SchemeOptions,
    SchemeSpec,
};
use crate::spectrum::{build_table, CoeffMethod};
use crate::transform::g_extended;

fn scheme_options(cfg: &RunConfig) -> SchemeOptions {
    SchemeOptions {
        conservative_n_phi: cfg.conservative_n,
    }
}

/// Writes the extended V-line data on a uniform grid: `transform.csv`.
pub fn cmd_transform(cfg: &RunConfig) -> Result<Vec<PathBuf>> {
    let path = cfg.out_dir.join("transform.csv");
    let csv = report::grid_csv(cfg.grid_n, |phi, psi| {
        g_extended(&cfg.phantom, phi, psi, cfg.geometry.r)
    });
    report::write_text(&path, &csv)?;
    Ok(vec![path])
}

/// Writes the coefficient table with spectrum-set membership flags:
/// `spectrum_<method>.csv`, plus the set itself as `spectrum_set.csv`.
pub fn cmd_spectrum(cfg: &RunConfig) -> Result<Vec<PathBuf>> {
    let k_set = SpectrumSet::from_geometry(&cfg.geometry);
    let table = build_table(
        &cfg.phantom,
        cfg.geometry.r,
        cfg.window.0,
        cfg.window.1,
        cfg.method,
        &cfg.resolution,
    )?;
    let name = match cfg.method {
        CoeffMethod::Direct => "spectrum_direct.csv",
        CoeffMethod::Bessel => "spectrum_bessel.csv",
    };
    let table_path = cfg.out_dir.join(name);
    report::write_text(&table_path, &report::table_csv(&table, &k_set))?;
    let set_path = cfg.out_dir.join("spectrum_set.csv");
    report::write_text(&set_path, &report::spectrum_set_csv(&k_set))?;
    Ok(vec![table_path, set_path])
}

/// Outcome of a compare run; `bound_holds` drives the binary's exit code.
#[derive(Debug, Clone)]
pub struct CompareOutcome {
    pub files: Vec<PathBuf>,
    pub bound_holds: bool,
    pub summary: String,
}

struct SchemeRun {
    label: &'static str,
    scheme: SchemeSpec,
    sup_error: f64,
    m0: usize,
}

/// Runs the selected schemes end to end (sample, reconstruct, measure,
/// bound) and writes error grids, coset tables, the bound breakdown and a
/// summary. Returns the outcome instead of exiting so library callers can
/// inspect it.
pub fn cmd_compare(cfg: &RunConfig) -> Result<CompareOutcome> {
    let geom = &cfg.geometry;
    let k_set = SpectrumSet::from_geometry(geom);
    let opts = scheme_options(cfg);
    let mut runs: Vec<SchemeRun> = Vec::new();
    let mut files = Vec::new();

    let selected: Vec<SchemeSelection> = match cfg.scheme {
        SchemeSelection::Both => vec![SchemeSelection::Standard, SchemeSelection::Interlaced],
        one => vec![one],
    };

    for sel in &selected {
        let (label, mut scheme) = match sel {
            SchemeSelection::Standard => ("standard", standard_scheme_opts(geom, opts)?),
            SchemeSelection::Interlaced => ("interlaced", interlaced_scheme_opts(geom, opts)?),
            SchemeSelection::Both => unreachable!(),
        };
        if let Some((n_phi, n_psi)) = cfg.lattice_override {
            // custom lattice: keep the scheme's shift structure and re-verify
            // disjointness, naming the offending translate on failure
            let shift = match scheme.kind {
                SchemeKind::Standard => 0,
                SchemeKind::Interlaced => n_phi / 2,
            };
            scheme.n_phi = n_phi;
            scheme.n_psi = n_psi;
            scheme.lattice = LatticeSpec::new(n_phi, n_psi, shift)?;
            if let Some(l) = find_overlapping_translate(&k_set, &scheme.lattice.reciprocal()) {
                return Err(Error::TranslatesOverlap(l[0], l[1]));
            }
        }
        let data = SampledData::sample(&cfg.phantom, &scheme.lattice, geom);
        let err = sup_error(&data, &k_set, &cfg.phantom, cfg.grid_n)?;
        let grid_path = cfg.out_dir.join(format!("compare_{label}_error.csv"));
        let csv = report::error_grid_csv(
            cfg.grid_n,
            |phi, psi| reconstruct(&data, &k_set, phi, psi).expect("disjointness verified above"),
            |phi, psi| g_extended(&cfg.phantom, phi, psi, geom.r),
        );
        report::write_text(&grid_path, &csv)?;
        files.push(grid_path);
        let cosets_path = cfg.out_dir.join(format!("compare_{label}_cosets.csv"));
        report::write_text(&cosets_path, &report::cosets_csv(&scheme.lattice))?;
        files.push(cosets_path);
        let m0 = sample_budget(&scheme);
        runs.push(SchemeRun {
            label,
            scheme,
            sup_error: err,
            m0,
        });
    }

    let bound = full_bound(&cfg.phantom, geom)?;
    let bound_path = cfg.out_dir.join("bound.csv");
    report::write_text(&bound_path, &report::bound_csv(&bound))?;
    files.push(bound_path);

    let mut summary = String::new();
    use std::fmt::Write as _;
    for run in &runs {
        let _ = writeln!(
            summary,
            "{}: N_phi = {}, N_psi = {}, M0 = {}, sup error = {:.6e}",
            run.label, run.scheme.n_phi, run.scheme.n_psi, run.m0, run.sup_error
        );
    }
    if let [s, i] = &runs[..] {
        let ratio = i.m0 as f64 / s.m0 as f64;
        let t = geom.theta;
        let _ = writeln!(
            summary,
            "budget ratio = {:.6} (target {:.6})",
            ratio,
            (1.0 + 2.0 * t) / (2.0 * (1.0 + t))
        );
    }
    let _ = writeln!(summary, "bound total = {:.6e}", bound.total);
    let bound_holds = runs.iter().all(|r| r.sup_error <= bound.total);
    let _ = writeln!(
        summary,
        "bound {}",
        if bound_holds { "holds" } else { "VIOLATED" }
    );

    // one CSV row per run plus the shared bound
    let mut row = String::from("scheme,n_phi,n_psi,m0,sup_error,bound_total,bound_holds\n");
    for run in &runs {
        let _ = writeln!(
            row,
            "{},{},{},{},{},{},{}",
            run.label,
            run.scheme.n_phi,
            run.scheme.n_psi,
            run.m0,
            report::fmt_float(run.sup_error),
            report::fmt_float(bound.total),
            u8::from(run.sup_error <= bound.total)
        );
    }
    let summary_csv = cfg.out_dir.join("compare_summary.csv");
    report::write_text(&summary_csv, &row)?;
    files.push(summary_csv);
    let summary_txt = cfg.out_dir.join("compare_summary.txt");
    report::write_text(&summary_txt, &summary)?;
    files.push(summary_txt);

    Ok(CompareOutcome {
        files,
        bound_holds,
        summary,
    })
}

/// Writes the bound breakdown alone: `bound.csv` and `bound.txt`.
pub fn cmd_bound(cfg: &RunConfig) -> Result<Vec<PathBuf>> {
    let bound = full_bound(&cfg.phantom, &cfg.geometry)?;
    let csv_path = cfg.out_dir.join("bound.csv");
    report::write_text(&csv_path, &report::bound_csv(&bound))?;
    let txt_path = cfg.out_dir.join("bound.txt");
    report::write_text(&txt_path, &report::bound_text(&bound))?;
    Ok(vec![csv_path, txt_path])
}
