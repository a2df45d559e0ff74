//! The sampling series and its reconstruction error.
//!
//! With spectrum set K whose reciprocal-lattice translates are disjoint, the
//! series
//!
//! ```text
//! S g(x) = (1/PQ) sum_{v in cosets} chi~_K(x - v) g(v),
//! chi~_K(x) = sum_{(k,m) in K} cos(k phi + m psi),
//! ```
//!
//! reproduces every trigonometric polynomial with spectrum in K exactly: by
//! Poisson summation the coset sum of `e^{i xi . v}` vanishes unless `xi`
//! lies on the reciprocal lattice, and disjointness leaves the zero shift as
//! the only survivor inside K. For general data the sup error is controlled
//! by the coefficient mass outside K.

use crate::error::{Error, Result};
use crate::lattice::{find_overlapping_translate, CosetPoint, LatticeSpec, SpectrumSet};
use crate::phantom::{Geometry, Phantom};
use crate::transform::{fold_psi, g_extended, VLineSample};

use std::f64::consts::PI;

const TAU: f64 = 2.0 * PI;

/// Whether a node was measured or implied zero by the support window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleFlag {
    Measured,
    ImpliedZero,
}

/// V-line data sampled on the cosets of a lattice.
#[derive(Debug, Clone)]
pub struct SampledData {
    pub spec: LatticeSpec,
    pub geometry: Geometry,
    pub cosets: Vec<CosetPoint>,
    /// Values in coset order; implied zeros are exactly 0.
    pub values: Vec<f64>,
    pub flags: Vec<SampleFlag>,
}

/// True when a V-line with this (periodic) half-opening angle meets the
/// support disk: the folded angle stays below pi/2 and the ray distance
/// `r sin psi` below `r0`.
pub fn is_measured(psi: f64, geom: &Geometry) -> bool {
    let pf = fold_psi(psi);
    pf < PI / 2.0 && geom.r * pf.sin() < geom.r0
}

/// Interpolation kernel: the Fourier series with unit coefficients on K.
///
/// Rows of K are symmetric m-intervals, so the m-sums collapse to Dirichlet
/// kernels: `chi~_K = sum_k cos(k dphi) sin((M_k + 1/2) dpsi) / sin(dpsi/2)`.
pub fn kernel_chi_k(k_set: &SpectrumSet, dphi: f64, dpsi: f64) -> f64 {
    let half = 0.5 * dpsi;
    let s = half.sin();
    let mut total = 0.0;
    if s.abs() < 1e-9 {
        for (k, mmax) in k_set.rows() {
            total += (k as f64 * dphi).cos() * (2 * mmax + 1) as f64;
        }
    } else {
        for (k, mmax) in k_set.rows() {
            let dirichlet = ((mmax as f64 + 0.5) * dpsi).sin() / s;
            total += (k as f64 * dphi).cos() * dirichlet;
        }
    }
    total
}

impl SampledData {
    /// Samples the extended V-line data of a phantom: measured nodes get
    /// `g`, nodes whose V-line misses the support store an implied zero.
    pub fn sample(p: &Phantom, spec: &LatticeSpec, geom: &Geometry) -> SampledData {
        let cosets = spec.cosets();
        let mut values = Vec::with_capacity(cosets.len());
        let mut flags = Vec::with_capacity(cosets.len());
        for v in &cosets {
            if is_measured(v.t, geom) {
                values.push(g_extended(p, v.s, v.t, geom.r));
                flags.push(SampleFlag::Measured);
            } else {
                values.push(0.0);
                flags.push(SampleFlag::ImpliedZero);
            }
        }
        SampledData {
            spec: spec.clone(),
            geometry: *geom,
            cosets,
            values,
            flags,
        }
    }

    /// Samples an arbitrary biperiodic function at every coset (all nodes
    /// flagged measured). Used to feed synthetic trigonometric data through
    /// the same reconstruction path.
    pub fn from_fn(
        spec: &LatticeSpec,
        geom: &Geometry,
        f: impl Fn(f64, f64) -> f64,
    ) -> SampledData {
        let cosets = spec.cosets();
        let values: Vec<f64> = cosets.iter().map(|v| f(v.s, v.t)).collect();
        let flags = vec![SampleFlag::Measured; cosets.len()];
        SampledData {
            spec: spec.clone(),
            geometry: *geom,
            cosets,
            values,
            flags,
        }
    }

    /// The data as V-line samples in coset order.
    pub fn samples(&self) -> impl Iterator<Item = VLineSample> + '_ {
        self.cosets
            .iter()
            .zip(&self.values)
            .map(|(v, &value)| VLineSample {
                phi: v.s,
                psi: v.t,
                value,
            })
    }

    /// Number of measured (non-implied) nodes.
    pub fn measured_count(&self) -> usize {
        self.flags
            .iter()
            .filter(|f| **f == SampleFlag::Measured)
            .count()
    }

    fn series_at(&self, k_set: &SpectrumSet, phi: f64, psi: f64) -> f64 {
        let n = (self.spec.p_count * self.spec.q_count) as f64;
        let mut acc = 0.0;
        for (v, &g) in self.cosets.iter().zip(&self.values) {
            if g != 0.0 {
                acc += kernel_chi_k(k_set, phi - v.s, psi - v.t) * g;
            }
        }
        acc / n
    }
}

fn require_disjoint(data: &SampledData, k_set: &SpectrumSet) -> Result<()> {
    match find_overlapping_translate(k_set, &data.spec.reciprocal()) {
        None => Ok(()),
        Some(l) => Err(Error::TranslatesOverlap(l[0], l[1])),
    }
}

/// Evaluates the sampling series at one point. The spectrum translates must
/// be disjoint under the data's reciprocal lattice; violating lattices are
/// rejected.
pub fn reconstruct(data: &SampledData, k_set: &SpectrumSet, phi: f64, psi: f64) -> Result<f64> {
    require_disjoint(data, k_set)?;
    Ok(data.series_at(k_set, phi, psi))
}

/// Max reconstruction error against an arbitrary reference on a uniform
/// `grid_n x grid_n` grid of `[0, 2pi)^2`, offset by half a cell from the
/// sampling nodes so exact-at-node reconstructions are not flattered.
pub fn sup_error_fn(
    data: &SampledData,
    k_set: &SpectrumSet,
    reference: impl Fn(f64, f64) -> f64,
    grid_n: usize,
) -> Result<f64> {
    if grid_n == 0 {
        return Err(Error::domain("sup_error grid must be nonempty"));
    }
    require_disjoint(data, k_set)?;
    let mut worst = 0.0_f64;
    for i in 0..grid_n {
        let phi = TAU * (i as f64 + 0.5) / grid_n as f64;
        for j in 0..grid_n {
            let psi = TAU * (j as f64 + 0.5) / grid_n as f64;
            let err = (data.series_at(k_set, phi, psi) - reference(phi, psi)).abs();
            worst = worst.max(err);
        }
    }
    Ok(worst)
}

/// Max error of the sampling series against the phantom's extended data.
pub fn sup_error(
    data: &SampledData,
    k_set: &SpectrumSet,
    p: &Phantom,
    grid_n: usize,
) -> Result<f64> {
    let r = data.geometry.r;
    sup_error_fn(data, k_set, |phi, psi| g_extended(p, phi, psi, r), grid_n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phantom::GaussianComponent;

    fn geom() -> Geometry {
        Geometry::new(1.5, 1.0, 5.0, 5.0 / 6.0).unwrap()
    }

    fn offcenter() -> Phantom {
        Phantom::new(
            vec![GaussianComponent {
                center: [0.2, 0.1],
                width: 0.12,
                amplitude: 1.0,
            }],
            1.0,
        )
        .unwrap()
    }

    /// Deterministic xorshift for reproducible pseudo-random test points.
    struct Rng(u64);
    impl Rng {
        fn next(&mut self) -> f64 {
            self.0 ^= self.0 << 13;
            self.0 ^= self.0 >> 7;
            self.0 ^= self.0 << 17;
            (self.0 >> 11) as f64 / (1u64 << 53) as f64
        }
    }

    #[test]
    fn kernel_examples() {
        let single = SpectrumSet::new(0.9, 1.0, 0.9);
        assert_eq!(single.members(), &[(0, 0)]);
        assert!((kernel_chi_k(&single, 0.7, -1.3) - 1.0).abs() < 1e-15);

        let k = SpectrumSet::new(1.5, 5.0, 5.0 / 6.0);
        assert!((kernel_chi_k(&k, 0.0, 0.0) - k.len() as f64).abs() < 1e-12);
    }

    #[test]
    fn kernel_matches_naive_cosine_sum() {
        let k = SpectrumSet::new(1.5, 5.0, 5.0 / 6.0);
        let mut rng = Rng(42);
        for _ in 0..50 {
            let dphi = TAU * rng.next();
            let dpsi = TAU * rng.next();
            let naive: f64 = k
                .members()
                .iter()
                .map(|&(kk, mm)| (kk as f64 * dphi + mm as f64 * dpsi).cos())
                .sum();
            let fast = kernel_chi_k(&k, dphi, dpsi);
            assert!((naive - fast).abs() < 1e-9, "at ({dphi}, {dpsi})");
        }
    }

    #[test]
    fn kernel_mean_is_one() {
        // quadrature of the kernel over the period cell picks out the (0,0)
        // mode: (1/4pi^2) int int chi~_K = 1
        let k = SpectrumSet::new(1.5, 5.0, 5.0 / 6.0);
        let n = 64;
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                acc += kernel_chi_k(&k, TAU * i as f64 / n as f64, TAU * j as f64 / n as f64);
            }
        }
        assert!((acc / (n * n) as f64 - 1.0).abs() < 1e-10);
    }

    #[test]
    fn sampling_flags_and_window_fraction() {
        let g = geom();
        let spec = LatticeSpec::new(22, 40, 0).unwrap();
        let p = offcenter();
        let data = SampledData::sample(&p, &spec, &g);
        assert_eq!(data.values.len(), 880);
        // implied zeros are exactly zero
        for (v, f) in data.values.iter().zip(&data.flags) {
            if *f == SampleFlag::ImpliedZero {
                assert_eq!(*v, 0.0);
            }
        }
        // measured fraction per column approximates 2 arcsin(r0/r) / 2pi
        let frac = 2.0 * (1.0 / 1.5_f64).asin() / TAU;
        let per_column = data.measured_count() as f64 / 22.0;
        assert!(
            (per_column - frac * 40.0).abs() <= 1.0,
            "per-column measured count {per_column} vs {}",
            frac * 40.0
        );
    }

    #[test]
    fn sampled_data_is_even_across_columns() {
        let g = geom();
        let spec = LatticeSpec::new(8, 32, 0).unwrap();
        let p = offcenter();
        let data = SampledData::sample(&p, &spec, &g);
        // value at (s, t) equals value at (s, 2pi - t)
        let samples: Vec<_> = data.samples().collect();
        for j in 0..8_usize {
            for l in 1..32_usize {
                let a = samples[j * 32 + l];
                let b = samples[j * 32 + (32 - l)];
                assert_eq!(a.phi, b.phi);
                assert!((a.value - b.value).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn zero_phantom_reconstructs_to_zero() {
        let g = geom();
        let spec = LatticeSpec::new(22, 40, 0).unwrap();
        let zero = Phantom::zero(1.0).unwrap();
        let data = SampledData::sample(&zero, &spec, &g);
        let k = SpectrumSet::from_geometry(&g);
        assert_eq!(reconstruct(&data, &k, 1.0, 2.0).unwrap(), 0.0);
        assert_eq!(sup_error(&data, &k, &zero, 16).unwrap(), 0.0);
    }

    #[test]
    fn insufficient_lattice_is_rejected() {
        let g = geom();
        let spec = LatticeSpec::new(11, 20, 0).unwrap();
        let p = offcenter();
        let data = SampledData::sample(&p, &spec, &g);
        let k = SpectrumSet::from_geometry(&g);
        match reconstruct(&data, &k, 0.0, 0.0) {
            Err(Error::TranslatesOverlap(_, _)) => {}
            other => panic!("expected overlap rejection, got {other:?}"),
        }
    }

    #[test]
    fn trig_polynomials_in_k_reconstruct_exactly() {
        let g = geom();
        let k = SpectrumSet::from_geometry(&g);
        let mut rng = Rng(7);
        // a modest random subset of K keeps the test fast; exactness holds
        // for any spectrum inside K
        for (p_count, q_count, shift) in [(22, 40, 0), (22, 29, 11)] {
            let spec = LatticeSpec::new(p_count, q_count, shift).unwrap();
            let mut terms: Vec<(i64, i64, f64, f64)> = Vec::new();
            for &(kk, mm) in k.members() {
                if rng.next() < 0.15 {
                    terms.push((kk, mm, rng.next() - 0.5, TAU * rng.next()));
                }
            }
            let poly = move |phi: f64, psi: f64| -> f64 {
                terms
                    .iter()
                    .map(|&(kk, mm, a, d)| a * (kk as f64 * phi + mm as f64 * psi + d).cos())
                    .sum()
            };
            let data = SampledData::from_fn(&spec, &g, &poly);
            for _ in 0..20 {
                let phi = TAU * rng.next();
                let psi = TAU * rng.next();
                let s = reconstruct(&data, &k, phi, psi).unwrap();
                assert!(
                    (s - poly(phi, psi)).abs() < 1e-9,
                    "not exact at ({phi}, {psi}) on ({p_count}, {q_count}, {shift})"
                );
            }
        }
    }

    #[test]
    fn reconstruction_is_linear() {
        let g = geom();
        let k = SpectrumSet::from_geometry(&g);
        let spec = LatticeSpec::new(22, 40, 0).unwrap();
        let f1 = |phi: f64, psi: f64| (2.0 * phi - psi).cos();
        let f2 = |phi: f64, psi: f64| (phi + 3.0 * psi).cos() * 0.4;
        let d1 = SampledData::from_fn(&spec, &g, f1);
        let d2 = SampledData::from_fn(&spec, &g, f2);
        let mut combo = d1.clone();
        for (c, (a, b)) in combo
            .values
            .iter_mut()
            .zip(d1.values.iter().zip(&d2.values))
        {
            *c = 3.0 * a + b;
        }
        let mut rng = Rng(99);
        for _ in 0..10 {
            let phi = TAU * rng.next();
            let psi = TAU * rng.next();
            let lhs = reconstruct(&combo, &k, phi, psi).unwrap();
            let rhs = 3.0 * reconstruct(&d1, &k, phi, psi).unwrap()
                + reconstruct(&d2, &k, phi, psi).unwrap();
            assert!((lhs - rhs).abs() < 1e-12);
        }
    }

    #[test]
    fn node_response_follows_poisson_summation() {
        // (1/PQ) sum_v e^{i xi . v} is 1 on the reciprocal lattice and 0 on
        // other integer frequencies; checked by direct summation
        let spec = LatticeSpec::new(6, 9, 3).unwrap();
        let recip = spec.reciprocal();
        let n = (spec.p_count * spec.q_count) as f64;
        let on_lattice = |kk: f64, mm: f64| -> bool {
            // xi = recip l has solutions l in Z^2
            let inv = recip.inverse().unwrap();
            let l = inv.mul_vec([kk, mm]);
            (l[0] - l[0].round()).abs() < 1e-9 && (l[1] - l[1].round()).abs() < 1e-9
        };
        for kk in -12..=12_i64 {
            for mm in -12..=12_i64 {
                let mut re = 0.0;
                let mut im = 0.0;
                for v in spec.cosets() {
                    let ph = kk as f64 * v.s + mm as f64 * v.t;
                    re += ph.cos();
                    im += ph.sin();
                }
                let mag = (re / n).hypot(im / n);
                if on_lattice(kk as f64, mm as f64) {
                    assert!((mag - 1.0).abs() < 1e-9, "expected unit response at ({kk},{mm})");
                } else {
                    assert!(mag < 1e-9, "expected zero response at ({kk},{mm})");
                }
            }
        }
    }

    #[test]
    fn oversampling_does_not_hurt() {
        let g = geom();
        let k = SpectrumSet::from_geometry(&g);
        let p = offcenter();
        let coarse = SampledData::sample(&p, &LatticeSpec::new(22, 40, 0).unwrap(), &g);
        let fine = SampledData::sample(&p, &LatticeSpec::new(44, 80, 0).unwrap(), &g);
        let e_coarse = sup_error(&coarse, &k, &p, 32).unwrap();
        let e_fine = sup_error(&fine, &k, &p, 32).unwrap();
        assert!(e_fine <= e_coarse + 1e-9, "{e_fine} vs {e_coarse}");
    }
}
