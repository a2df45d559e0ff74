//! Sampling lattices for 2pi-biperiodic data and the finite spectrum set.
//!
//! The period lattice is always `2 pi Z^2`. A sampling lattice is generated by
//!
//! ```text
//! W = 2 pi [ 1/P      0  ]
//!          [ N/(PQ)  1/Q ]
//! ```
//!
//! with integers P, Q > 0 and 0 <= N < P, whose cosets inside one period cell
//! are the PQ points `(2 pi j / P, 2 pi (l + N j / P) / Q)`. Reconstruction is
//! possible exactly when the translates of the spectrum set K under the
//! reciprocal lattice `2 pi W^{-T} Z^2` are pairwise disjoint.

use crate::error::{Error, Result};

/// Row-major 2x2 matrix, just enough linear algebra for the lattice work.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2(pub [[f64; 2]; 2]);

impl Mat2 {
    pub fn diag(a: f64, b: f64) -> Self {
        Mat2([[a, 0.0], [0.0, b]])
    }

    pub fn det(&self) -> f64 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    pub fn mul_vec(&self, v: [f64; 2]) -> [f64; 2] {
        [
            self.0[0][0] * v[0] + self.0[0][1] * v[1],
            self.0[1][0] * v[0] + self.0[1][1] * v[1],
        ]
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        let a = &self.0;
        let b = &other.0;
        Mat2([
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ])
    }

    pub fn inverse(&self) -> Result<Mat2> {
        let d = self.det();
        if d.abs() < 1e-300 {
            return Err(Error::domain("singular 2x2 matrix has no inverse"));
        }
        let a = &self.0;
        Ok(Mat2([
            [a[1][1] / d, -a[0][1] / d],
            [-a[1][0] / d, a[0][0] / d],
        ]))
    }

    pub fn transpose(&self) -> Mat2 {
        let a = &self.0;
        Mat2([[a[0][0], a[1][0]], [a[0][1], a[1][1]]])
    }

    pub fn scale(&self, s: f64) -> Mat2 {
        let a = &self.0;
        Mat2([
            [a[0][0] * s, a[0][1] * s],
            [a[1][0] * s, a[1][1] * s],
        ])
    }

    /// Smallest singular value; used to bound integer-vector enumeration.
    pub fn min_singular_value(&self) -> f64 {
        let a = &self.0;
        // eigenvalues of A^T A
        let g00 = a[0][0] * a[0][0] + a[1][0] * a[1][0];
        let g01 = a[0][0] * a[0][1] + a[1][0] * a[1][1];
        let g11 = a[0][1] * a[0][1] + a[1][1] * a[1][1];
        let tr = g00 + g11;
        let det = g00 * g11 - g01 * g01;
        let disc = (tr * tr / 4.0 - det).max(0.0).sqrt();
        (tr / 2.0 - disc).max(0.0).sqrt()
    }
}

const TAU: f64 = 2.0 * std::f64::consts::PI;

/// Ceiling with a small guard so targets that are exact integers up to float
/// noise do not get bumped a full step.
pub(crate) fn ceil_guarded(x: f64) -> u32 {
    (x - 1e-9).ceil().max(1.0) as u32
}

/// A sampling lattice inside the 2 pi-periodic cell.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeSpec {
    /// Period matrix, always `2 pi I`.
    pub pmat: Mat2,
    /// Sampling-lattice generator.
    pub wmat: Mat2,
    pub p_count: u32,
    pub q_count: u32,
    /// Column shift N in [0, P).
    pub shift: u32,
}

/// One sampling node `(s_j, t_jl)` with its integer indices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CosetPoint {
    pub j: u32,
    pub l: u32,
    pub s: f64,
    pub t: f64,
}

impl LatticeSpec {
    /// Builds the lattice for integers `P, Q > 0`, `0 <= N < P` and verifies
    /// that the period lattice is a sublattice (`P = W M` with integer `M`)
    /// and that the index equals `P Q`.
    pub fn new(p_count: u32, q_count: u32, shift: u32) -> Result<Self> {
        if p_count == 0 || q_count == 0 {
            return Err(Error::domain("lattice requires P, Q > 0"));
        }
        if shift >= p_count {
            return Err(Error::domain(format!(
                "lattice shift N must satisfy 0 <= N < P, got N = {shift}, P = {p_count}"
            )));
        }
        let p = p_count as f64;
        let q = q_count as f64;
        let n = shift as f64;
        let wmat = Mat2([[1.0 / p, 0.0], [n / (p * q), 1.0 / q]]).scale(TAU);
        let pmat = Mat2::diag(TAU, TAU);
        let spec = LatticeSpec {
            pmat,
            wmat,
            p_count,
            q_count,
            shift,
        };
        // M = W^{-1} P must be integral
        let m = spec.wmat.inverse()?.mul(&pmat);
        for row in m.0 {
            for v in row {
                if (v - v.round()).abs() > 1e-12 {
                    return Err(Error::domain(format!(
                        "period lattice is not a sublattice: W^-1 P entry {v} not integral"
                    )));
                }
            }
        }
        let index = (pmat.det() / spec.wmat.det()).abs();
        if (index - p * q).abs() > 1e-9 * p * q {
            return Err(Error::domain(format!(
                "lattice index {index} does not equal P Q = {}",
                p * q
            )));
        }
        Ok(spec)
    }

    /// The `P Q` coset representatives of the sampling lattice inside one
    /// period cell, in (j, l) lexicographic order.
    pub fn cosets(&self) -> Vec<CosetPoint> {
        let mut pts = Vec::with_capacity((self.p_count * self.q_count) as usize);
        for j in 0..self.p_count {
            let s = TAU * j as f64 / self.p_count as f64;
            for l in 0..self.q_count {
                let t = TAU * (l as f64 + self.shift as f64 * j as f64 / self.p_count as f64)
                    / self.q_count as f64;
                pts.push(CosetPoint {
                    j,
                    l,
                    s,
                    t: t.rem_euclid(TAU),
                });
            }
        }
        pts
    }

    /// Generator `2 pi W^{-T}` of the reciprocal lattice. For this
    /// parametrization it is the integer matrix `[[P, -N], [0, Q]]`.
    pub fn reciprocal(&self) -> Mat2 {
        self.wmat
            .inverse()
            .expect("valid lattice generators are nonsingular")
            .transpose()
            .scale(TAU)
    }
}

/// The finite integer frequency set
/// `K = {(k, m) : |k| < rb/theta, max(|k+m|, |k-m|) < rb}`.
///
/// Since `max(|k+m|, |k-m|) = |k| + |m|`, the second condition is an open
/// l1 diamond of radius `rb`; rows in k are symmetric intervals in m.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumSet {
    /// Strip half-width `rb / theta`.
    pub half_width_k: f64,
    /// Diamond radius `rb`.
    pub diag_width: f64,
    members: Vec<(i64, i64)>,
    /// Per-k largest |m|, indexed by k + k_max; -1 encodes an empty row.
    row_mmax: Vec<i64>,
    k_max: i64,
}

/// Near-boundary guard: membership comparisons treat values within this
/// relative distance of a threshold as on the boundary, which is excluded
/// (the defining inequalities are strict).
const BOUNDARY_GUARD: f64 = 1e-12;

impl SpectrumSet {
    pub fn new(r: f64, b: f64, theta: f64) -> Self {
        let diag = r * b;
        let strip = diag / theta;
        let in_strip = |k: i64| (k.abs() as f64) < strip - BOUNDARY_GUARD * strip.max(1.0);
        let in_diamond =
            |k: i64, m: i64| ((k.abs() + m.abs()) as f64) < diag - BOUNDARY_GUARD * diag.max(1.0);

        let k_max = diag.ceil() as i64;
        let mut members = Vec::new();
        let mut row_mmax = vec![-1_i64; (2 * k_max + 1) as usize];
        for k in -k_max..=k_max {
            if !in_strip(k) {
                continue;
            }
            let mut mm = -1;
            let m_cap = diag.ceil() as i64;
            for m in -m_cap..=m_cap {
                if in_diamond(k, m) {
                    members.push((k, m));
                    mm = mm.max(m.abs());
                }
            }
            row_mmax[(k + k_max) as usize] = mm;
        }
        SpectrumSet {
            half_width_k: strip,
            diag_width: diag,
            members,
            row_mmax,
            k_max,
        }
    }

    pub fn from_geometry(geom: &crate::phantom::Geometry) -> Self {
        SpectrumSet::new(geom.r, geom.b, geom.theta)
    }

    pub fn members(&self) -> &[(i64, i64)] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, k: i64, m: i64) -> bool {
        if k.abs() > self.k_max {
            return false;
        }
        let mm = self.row_mmax[(k + self.k_max) as usize];
        mm >= 0 && m.abs() <= mm
    }

    /// Rows `(k, m_max)` with nonempty symmetric m-interval; drives the
    /// Dirichlet-kernel evaluation in the sampler.
    pub fn rows(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        (-self.k_max..=self.k_max).filter_map(move |k| {
            let mm = self.row_mmax[(k + self.k_max) as usize];
            (mm >= 0).then_some((k, mm))
        })
    }

    /// Largest pairwise Euclidean distance between members.
    pub fn diameter(&self) -> f64 {
        let mut best = 0.0_f64;
        for &(k1, m1) in &self.members {
            for &(k2, m2) in &self.members {
                let d = (((k1 - k2) * (k1 - k2) + (m1 - m2) * (m1 - m2)) as f64).sqrt();
                best = best.max(d);
            }
        }
        best
    }
}

/// Finds a nonzero integer vector `l` whose reciprocal-lattice translate of
/// `K` intersects `K`, searching all shifts of length at most
/// `diameter(K) + 1` (longer shifts cannot overlap a set of that diameter).
pub fn find_overlapping_translate(k_set: &SpectrumSet, recip: &Mat2) -> Option<[i64; 2]> {
    if k_set.is_empty() {
        return None;
    }
    let radius = k_set.diameter() + 1.0;
    let sv = recip.min_singular_value();
    if sv < 1e-12 {
        // degenerate generator: the zero shift direction overlaps trivially
        return Some([0, 1]);
    }
    let span = (radius / sv).ceil() as i64 + 1;
    for l0 in -span..=span {
        for l1 in -span..=span {
            if l0 == 0 && l1 == 0 {
                continue;
            }
            let shift = recip.mul_vec([l0 as f64, l1 as f64]);
            if shift[0].hypot(shift[1]) > radius {
                continue;
            }
            // a real-valued shift only matters if it is an integer vector
            let si = [shift[0].round(), shift[1].round()];
            if (shift[0] - si[0]).abs() > 1e-9 || (shift[1] - si[1]).abs() > 1e-9 {
                continue;
            }
            let (sk, sm) = (si[0] as i64, si[1] as i64);
            for &(k, m) in k_set.members() {
                if k_set.contains(k + sk, m + sm) {
                    return Some([l0, l1]);
                }
            }
        }
    }
    None
}

/// True when every nonzero reciprocal translate of `K` misses `K`.
pub fn translates_disjoint(k_set: &SpectrumSet, recip: &Mat2) -> bool {
    find_overlapping_translate(k_set, recip).is_none()
}
