//! Run configuration: a flat key-value text format.
//!
//! One `key = value` pair per line, `#` starts a comment. Phantom components
//! are indexed groups `component.<i>.<field>` with fields `cx`, `cy`,
//! `sigma`, `amplitude`; indices must start at 0 and be contiguous. A file
//! with no components describes the zero phantom.
//!
//! ```text
//! # geometry
//! r = 1.5
//! b = 5.0
//! theta = 0.8333333333333333
//! support_radius = 1.0
//!
//! # driver defaults (all optional)
//! scheme = both            # standard | interlaced | both
//! method = direct          # direct | bessel
//! grid = 128
//! out = out
//! conservative_n = false
//! kmax = 22                # spectrum window override
//! mmax = 30
//! sigma_max = 60.0         # bessel-route frequency cutoff
//!
//! component.0.cx = 0.2
//! component.0.cy = 0.1
//! component.0.sigma = 0.12
//! component.0.amplitude = 1.0
//! ```

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::phantom::{GaussianComponent, Geometry, Phantom};
use crate::spectrum::{default_sigma_max, default_window, CoeffMethod, Resolution};

/// Which schemes a compare run covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchemeSelection {
    Standard,
    Interlaced,
    Both,
}

/// Everything a driver command needs, validated at load time.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub phantom: Phantom,
    pub geometry: Geometry,
    pub scheme: SchemeSelection,
    pub method: CoeffMethod,
    pub grid_n: usize,
    pub out_dir: PathBuf,
    pub conservative_n: bool,
    /// Spectrum window (kmax, mmax); defaults follow the geometry.
    pub window: (i64, i64),
    pub resolution: Resolution,
    /// Custom node counts replacing the scheme-derived ones; the compare
    /// command still enforces translate disjointness and fails loudly on
    /// undersampled lattices.
    pub lattice_override: Option<(u32, u32)>,
}

fn parse_f64(key: &str, v: &str) -> Result<f64> {
    v.parse::<f64>()
        .map_err(|_| Error::config(format!("key '{key}': expected a number, got '{v}'")))
}

fn parse_usize(key: &str, v: &str) -> Result<usize> {
    v.parse::<usize>()
        .map_err(|_| Error::config(format!("key '{key}': expected a nonnegative integer, got '{v}'")))
}

fn parse_bool(key: &str, v: &str) -> Result<bool> {
    match v {
        "true" => Ok(true),
        "false" => Ok(false),
        _ => Err(Error::config(format!(
            "key '{key}': expected true or false, got '{v}'"
        ))),
    }
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<RunConfig> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        RunConfig::parse(&text)
    }

    pub fn parse(text: &str) -> Result<RunConfig> {
        let mut scalars: BTreeMap<String, String> = BTreeMap::new();
        let mut comps: BTreeMap<usize, [Option<f64>; 4]> = BTreeMap::new();

        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::config(format!("line {}: expected 'key = value'", lineno + 1))
            })?;
            let key = key.trim();
            let value = value.trim();
            if let Some(rest) = key.strip_prefix("component.") {
                let (idx, field) = rest.split_once('.').ok_or_else(|| {
                    Error::config(format!(
                        "line {}: component keys look like component.<i>.<field>",
                        lineno + 1
                    ))
                })?;
                let idx: usize = idx.parse().map_err(|_| {
                    Error::config(format!("line {}: bad component index '{idx}'", lineno + 1))
                })?;
                let slot = match field {
                    "cx" => 0,
                    "cy" => 1,
                    "sigma" => 2,
                    "amplitude" => 3,
                    other => {
                        return Err(Error::config(format!(
                            "line {}: unknown component field '{other}' \
                             (expected cx, cy, sigma, amplitude)",
                            lineno + 1
                        )))
                    }
                };
                let entry = comps.entry(idx).or_insert([None; 4]);
                if entry[slot].is_some() {
                    return Err(Error::config(format!(
                        "component.{idx}.{field} given twice"
                    )));
                }
                entry[slot] = Some(parse_f64(key, value)?);
            } else {
                if scalars.contains_key(key) {
                    return Err(Error::config(format!("key '{key}' given twice")));
                }
                scalars.insert(key.to_string(), value.to_string());
            }
        }

        let mut take = |k: &str| scalars.remove(k);
        let require = |k: &str, v: Option<String>| {
            v.ok_or_else(|| Error::config(format!("missing required key '{k}'")))
        };

        let r = parse_f64("r", &require("r", take("r"))?)?;
        let b = parse_f64("b", &require("b", take("b"))?)?;
        let theta = parse_f64("theta", &require("theta", take("theta"))?)?;
        let support_radius = parse_f64(
            "support_radius",
            &require("support_radius", take("support_radius"))?,
        )?;
        let geometry = Geometry::new(r, support_radius, b, theta)
            .map_err(|e| Error::config(format!("geometry: {e}")))?;

        let mut components = Vec::new();
        for (expected, (idx, fields)) in comps.iter().enumerate() {
            if *idx != expected {
                return Err(Error::config(format!(
                    "component indices must be contiguous from 0; missing component.{expected}"
                )));
            }
            let name = ["cx", "cy", "sigma", "amplitude"];
            for (slot, f) in fields.iter().enumerate() {
                if f.is_none() {
                    return Err(Error::config(format!(
                        "component.{idx} is missing field '{}'",
                        name[slot]
                    )));
                }
            }
            components.push(GaussianComponent {
                center: [fields[0].unwrap(), fields[1].unwrap()],
                width: fields[2].unwrap(),
                amplitude: fields[3].unwrap(),
            });
        }
        let phantom = Phantom::new(components, support_radius)
            .map_err(|e| Error::config(format!("phantom: {e}")))?;

        let scheme = match take("scheme").as_deref() {
            None | Some("both") => SchemeSelection::Both,
            Some("standard") => SchemeSelection::Standard,
            Some("interlaced") => SchemeSelection::Interlaced,
            Some(other) => {
                return Err(Error::config(format!(
                    "key 'scheme': expected standard, interlaced or both, got '{other}'"
                )))
            }
        };
        let method = match take("method").as_deref() {
            None | Some("direct") => CoeffMethod::Direct,
            Some("bessel") => CoeffMethod::Bessel,
            Some(other) => {
                return Err(Error::config(format!(
                    "key 'method': expected direct or bessel, got '{other}'"
                )))
            }
        };
        let grid_n = match take("grid") {
            Some(v) => parse_usize("grid", &v)?,
            None => 128,
        };
        if grid_n == 0 {
            return Err(Error::config("key 'grid': must be positive"));
        }
        let out_dir = PathBuf::from(take("out").unwrap_or_else(|| "out".to_string()));
        let conservative_n = match take("conservative_n") {
            Some(v) => parse_bool("conservative_n", &v)?,
            None => false,
        };
        let default_w = default_window(&geometry);
        let kmax = match take("kmax") {
            Some(v) => parse_usize("kmax", &v)? as i64,
            None => default_w.0,
        };
        let mmax = match take("mmax") {
            Some(v) => parse_usize("mmax", &v)? as i64,
            None => default_w.1,
        };
        let sigma_max = match take("sigma_max") {
            Some(v) => parse_f64("sigma_max", &v)?,
            None => default_sigma_max(&phantom, geometry.b),
        };
        if sigma_max < geometry.b {
            return Err(Error::config(format!(
                "key 'sigma_max': {sigma_max} is below the band limit b = {}; \
                 the frequency integral would be band-truncated",
                geometry.b
            )));
        }
        let grid_direct = match take("spectrum_grid") {
            Some(v) => parse_usize("spectrum_grid", &v)?,
            None => 1024,
        };
        let alpha_n = match take("alpha_n") {
            Some(v) => parse_usize("alpha_n", &v)?,
            None => 128,
        };
        let lattice_override = match (take("n_phi"), take("n_psi")) {
            (None, None) => None,
            (Some(np), Some(nq)) => {
                let np = parse_usize("n_phi", &np)?;
                let nq = parse_usize("n_psi", &nq)?;
                if np == 0 || nq == 0 {
                    return Err(Error::config("n_phi and n_psi must be positive"));
                }
                Some((np as u32, nq as u32))
            }
            _ => {
                return Err(Error::config(
                    "n_phi and n_psi must be given together or not at all",
                ))
            }
        };

        if let Some(k) = scalars.keys().next() {
            return Err(Error::config(format!("unknown key '{k}'")));
        }

        Ok(RunConfig {
            phantom,
            geometry,
            scheme,
            method,
            grid_n,
            out_dir,
            conservative_n,
            window: (kmax, mmax),
            resolution: Resolution {
                grid_n: grid_direct,
                sigma_max,
                alpha_n,
            },
            lattice_override,
        })
    }
}
