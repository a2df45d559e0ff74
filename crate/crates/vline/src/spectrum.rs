//! Fourier coefficients of the extended V-line data, by two independent
//! routes.
//!
//! The direct route evaluates `g` on a uniform biperiodic grid and takes the
//! discrete transform; for smooth periodic data the trapezoid sums converge
//! spectrally. The Bessel route never touches `g`: it expresses
//!
//! ```text
//! ghat_{k,m} = (-i)^k / (4 pi^2) *
//!     int_R H_k(sigma) [ B_{k-m}(r sigma) + B_{k+m}(r sigma) ] dsigma,
//! H_k(sigma) = int_0^{2pi} fhat(sigma theta(alpha)) e^{-i k alpha} dalpha,
//! B_n(x)     = int_{-pi/2}^{pi/2} e^{i (x sin t + n t)} dt,
//! ```
//!
//! where the half-range kernel expands through Jacobi-Anger into
//! `B_n(x) = sum_j J_j(x) c_{j+n}` with `c_0 = pi`, `c_q = 2 sin(q pi/2)/q`.
//! For indices with `k + m` even the pair `B_{k-m} + B_{k+m}` collapses to
//! `pi (J_{k-m} + J_{k+m})` under the sigma symmetrization, i.e. the plain
//! product of the band-limited transform with the ray kernels
//! `J_{k+-m}(r sigma)`; the odd half-range weights carry the remaining
//! coefficients. Agreement of the two routes is the central cross-check of
//! the crate.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::bessel;
use crate::error::{Error, Result};
use crate::lattice::SpectrumSet;
use crate::phantom::Phantom;
use crate::quad;
use crate::transform::g_extended;

const TAU: f64 = 2.0 * PI;

/// Which route produced a coefficient table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffMethod {
    Direct,
    Bessel,
}

/// Resolution knobs for [`build_table`].
#[derive(Debug, Clone, Copy)]
pub struct Resolution {
    /// Grid side for the direct route; a power of two, at least 256.
    pub grid_n: usize,
    /// Frequency cutoff for the Bessel route.
    pub sigma_max: f64,
    /// Trapezoid nodes for the angular integral of the Bessel route.
    pub alpha_n: usize,
}

impl Default for Resolution {
    fn default() -> Self {
        Resolution {
            grid_n: 1024,
            sigma_max: 60.0,
            alpha_n: 128,
        }
    }
}

/// Frequency cutoff that makes the neglected Gaussian tail of every
/// component fall below ~1e-13 of its peak, but never less than `2 b`.
pub fn default_sigma_max(p: &Phantom, b: f64) -> f64 {
    match p.min_width() {
        Some(w) => (8.0 / w).max(2.0 * b),
        None => 2.0 * b,
    }
}

/// Uniform samples of the extended data on `[0, 2pi) x [-pi, pi)`.
pub struct DataGrid {
    n: usize,
    values: Vec<f64>,
}

impl DataGrid {
    pub fn sample(p: &Phantom, r: f64, grid_n: usize) -> Result<Self> {
        if grid_n < 256 || !grid_n.is_power_of_two() {
            return Err(Error::domain(format!(
                "direct grid size must be a power of two >= 256, got {grid_n}"
            )));
        }
        let mut values = vec![0.0; grid_n * grid_n];
        for a in 0..grid_n {
            let phi = TAU * a as f64 / grid_n as f64;
            for bi in 0..grid_n {
                let psi = -PI + TAU * bi as f64 / grid_n as f64;
                values[a * grid_n + bi] = g_extended(p, phi, psi, r);
            }
        }
        Ok(DataGrid { n: grid_n, values })
    }

    pub fn grid_n(&self) -> usize {
        self.n
    }

    /// Mean of `|g|^2` over the grid, i.e. `(1/4pi^2) int int |g|^2`.
    pub fn mean_square(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum::<f64>() / (self.n * self.n) as f64
    }

    /// Trapezoid approximation of one Fourier coefficient.
    pub fn coefficient(&self, k: i64, m: i64) -> Complex64 {
        let n = self.n;
        let mut sum = Complex64::new(0.0, 0.0);
        for a in 0..n {
            let phi = TAU * a as f64 / n as f64;
            let mut row = Complex64::new(0.0, 0.0);
            for bi in 0..n {
                let psi = -PI + TAU * bi as f64 / n as f64;
                row += Complex64::from_polar(self.values[a * n + bi], -(m as f64) * psi);
            }
            sum += row * Complex64::from_polar(1.0, -(k as f64) * phi);
        }
        sum / (n * n) as f64
    }
}

/// Direct-route coefficient from a fresh grid evaluation.
pub fn coeff_direct(p: &Phantom, r: f64, k: i64, m: i64, grid_n: usize) -> Result<Complex64> {
    Ok(DataGrid::sample(p, r, grid_n)?.coefficient(k, m))
}

/// `c_q = int_{-pi/2}^{pi/2} e^{i q t} dt`, even in q.
fn half_range_weight(q: i64) -> f64 {
    if q == 0 {
        return PI;
    }
    let qa = q.abs();
    if qa % 2 == 0 {
        0.0
    } else {
        // sin(qa pi/2) alternates +1, -1 over odd qa
        let sign = if (qa - 1) % 4 == 0 { 1.0 } else { -1.0 };
        2.0 * sign / qa as f64
    }
}

/// Evaluates `B_{n1}(x)` and `B_{n2}(x)` from one Bessel array pass.
fn half_range_pair(n1: i64, n2: i64, x: f64) -> (f64, f64) {
    // B_n(-x) = B_{-n}(x); reduce to x >= 0
    let (n1, n2, xa) = if x < 0.0 { (-n1, -n2, -x) } else { (n1, n2, x) };
    let nmax = n1.abs().max(n2.abs());
    let len = xa.ceil() as i64 + nmax + 60;
    let j = bessel::bessel_j_array(len as usize, xa);
    let mut b = [0.0_f64; 2];
    for (slot, n) in [(0usize, n1), (1usize, n2)] {
        // sum over j in Z of J_j(x) c_{j+n}, folding negative j by parity
        let mut acc = j[0] * half_range_weight(n);
        let mut sign = -1.0; // (-1)^jj for jj = 1, 2, ...
        for jj in 1..=len {
            let w = half_range_weight(n + jj) + sign * half_range_weight(n - jj);
            if w != 0.0 {
                acc += j[jj as usize] * w;
            }
            sign = -sign;
        }
        b[slot] = acc;
    }
    (b[0], b[1])
}

/// Bessel-route coefficient: adaptive quadrature in sigma of the angular
/// transform of `fhat` against the half-range ray kernels.
///
/// `sigma_max` must cover both the band limit and the phantom's own spectral
/// decay (see [`default_sigma_max`]); `alpha_n` is the trapezoid node count
/// of the inner angular integral.
pub fn coeff_bessel(
    p: &Phantom,
    r: f64,
    k: i64,
    m: i64,
    sigma_max: f64,
    alpha_n: usize,
) -> Result<Complex64> {
    if !(sigma_max > 0.0) || !sigma_max.is_finite() {
        return Err(Error::domain(format!(
            "coeff_bessel requires sigma_max > 0, got {sigma_max}"
        )));
    }
    if alpha_n < 16 {
        return Err(Error::domain(format!(
            "coeff_bessel requires at least 16 angular nodes, got {alpha_n}"
        )));
    }
    let alphas: Vec<f64> = (0..alpha_n)
        .map(|i| TAU * i as f64 / alpha_n as f64)
        .collect();
    let phases: Vec<Complex64> = alphas
        .iter()
        .map(|&a| Complex64::from_polar(1.0, -(k as f64) * a))
        .collect();
    let h_k = |sigma: f64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (a, ph) in alphas.iter().zip(&phases) {
            acc += p.fourier([sigma * a.cos(), sigma * a.sin()]) * ph;
        }
        acc * (TAU / alpha_n as f64)
    };
    // panels no wider than a quarter oscillation of the ray kernels at r sigma
    let presplit = ((2.0 * sigma_max) / (PI / (2.0 * r)).min(1.0)).ceil() as usize;
    let integral: Complex64 = quad::integrate(
        |sigma: f64| {
            let (b1, b2) = half_range_pair(k - m, k + m, r * sigma);
            h_k(sigma) * (b1 + b2)
        },
        -sigma_max,
        sigma_max,
        1e-9,
        presplit.clamp(16, 4096),
    );
    // (-i)^k
    let prefactor = Complex64::new(0.0, -1.0).powi(k as i32);
    Ok(prefactor * integral / (4.0 * PI * PI))
}

/// A window of Fourier coefficients `|k| <= kmax`, `|m| <= mmax`.
#[derive(Debug, Clone)]
pub struct FourierTable {
    pub kmax: i64,
    pub mmax: i64,
    pub method: CoeffMethod,
    data: Vec<Complex64>,
}

impl FourierTable {
    fn index(&self, k: i64, m: i64) -> usize {
        debug_assert!(k.abs() <= self.kmax && m.abs() <= self.mmax);
        ((k + self.kmax) * (2 * self.mmax + 1) + (m + self.mmax)) as usize
    }

    pub fn get(&self, k: i64, m: i64) -> Complex64 {
        self.data[self.index(k, m)]
    }

    pub fn entries(&self) -> impl Iterator<Item = (i64, i64, Complex64)> + '_ {
        let mmax = self.mmax;
        let kmax = self.kmax;
        self.data.iter().enumerate().map(move |(i, &c)| {
            let k = i as i64 / (2 * mmax + 1) - kmax;
            let m = i as i64 % (2 * mmax + 1) - mmax;
            (k, m, c)
        })
    }
}

/// Default coefficient window for a geometry: the k-strip of the standard
/// scheme plus a diamond-radius margin in m, so the tail outside K is
/// observable.
pub fn default_window(geom: &crate::phantom::Geometry) -> (i64, i64) {
    let kmax = (2.0 * geom.rb() / (geom.theta * geom.theta)).ceil() as i64;
    (kmax, kmax + geom.rb().ceil() as i64)
}

/// Fills the whole window with one method.
///
/// The direct route samples `g` once and reuses the grid for every entry
/// (two-stage partial transform); the Bessel route evaluates entries
/// independently.
pub fn build_table(
    p: &Phantom,
    r: f64,
    kmax: i64,
    mmax: i64,
    method: CoeffMethod,
    res: &Resolution,
) -> Result<FourierTable> {
    if kmax < 0 || mmax < 0 {
        return Err(Error::domain("table window bounds must be nonnegative"));
    }
    let mut data = vec![Complex64::new(0.0, 0.0); ((2 * kmax + 1) * (2 * mmax + 1)) as usize];
    match method {
        CoeffMethod::Direct => {
            let grid = DataGrid::sample(p, r, res.grid_n)?;
            let n = grid.n;
            // stage 1: psi transform per row, stepping the phase one
            // frequency unit per m instead of n^2 trig calls per m
            let u: Vec<Complex64> = (0..n)
                .map(|bi| Complex64::from_polar(1.0, -(-PI + TAU * bi as f64 / n as f64)))
                .collect();
            let mut phase: Vec<Complex64> = (0..n)
                .map(|bi| {
                    Complex64::from_polar(1.0, (mmax as f64) * (-PI + TAU * bi as f64 / n as f64))
                })
                .collect();
            let mcount = (2 * mmax + 1) as usize;
            // row_t[mi * n + a] = sum_b g[a, b] e^{-i m psi_b}
            let mut row_t = vec![Complex64::new(0.0, 0.0); mcount * n];
            for mi in 0..mcount {
                for a in 0..n {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for (ph, g) in phase.iter().zip(&grid.values[a * n..(a + 1) * n]) {
                        acc += ph * g;
                    }
                    row_t[mi * n + a] = acc;
                }
                if mi + 1 < mcount {
                    for (ph, uu) in phase.iter_mut().zip(&u) {
                        *ph *= uu;
                    }
                }
            }
            // stage 2: phi transform
            for mi in 0..mcount {
                for k in -kmax..=kmax {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for a in 0..n {
                        let phi = TAU * a as f64 / n as f64;
                        acc += row_t[mi * n + a] * Complex64::from_polar(1.0, -(k as f64) * phi);
                    }
                    data[((k + kmax) * (2 * mmax + 1)) as usize + mi] = acc / (n * n) as f64;
                }
            }
        }
        CoeffMethod::Bessel => {
            for k in -kmax..=kmax {
                for m in -mmax..=mmax {
                    let c = coeff_bessel(p, r, k, m, res.sigma_max, res.alpha_n)?;
                    data[((k + kmax) * (2 * mmax + 1) + (m + mmax)) as usize] = c;
                }
            }
        }
    }
    Ok(FourierTable {
        kmax,
        mmax,
        method,
        data,
    })
}

/// Tail magnitudes of a table outside the spectrum set.
#[derive(Debug, Clone, Copy)]
pub struct TailReport {
    /// Largest `|ghat|` over window entries outside K.
    pub max_outside: f64,
    /// Sum of `|ghat|` over window entries outside K.
    pub sum_outside: f64,
    /// Largest `|ghat|` on the outermost window shell relative to
    /// `max_outside`; small values indicate the truncated window loses
    /// little of the true tail.
    pub edge_to_peak: f64,
}

/// Measures the coefficient mass outside `K`. The window must contain `K`.
pub fn tail_max(table: &FourierTable, k_set: &SpectrumSet) -> Result<TailReport> {
    let kk = k_set
        .members()
        .iter()
        .map(|&(k, _)| k.abs())
        .max()
        .unwrap_or(0);
    let km = k_set
        .members()
        .iter()
        .map(|&(_, m)| m.abs())
        .max()
        .unwrap_or(0);
    if kk > table.kmax || km > table.mmax {
        return Err(Error::domain(format!(
            "table window ({}, {}) does not contain the spectrum set ({kk}, {km})",
            table.kmax, table.mmax
        )));
    }
    let mut max_outside = 0.0_f64;
    let mut sum_outside = 0.0_f64;
    let mut edge = 0.0_f64;
    for (k, m, c) in table.entries() {
        let a = c.norm();
        if !k_set.contains(k, m) {
            max_outside = max_outside.max(a);
            sum_outside += a;
        }
        if k.abs() == table.kmax || m.abs() == table.mmax {
            edge = edge.max(a);
        }
    }
    Ok(TailReport {
        max_outside,
        sum_outside,
        edge_to_peak: if max_outside > 0.0 {
            edge / max_outside
        } else {
            0.0
        },
    })
}
