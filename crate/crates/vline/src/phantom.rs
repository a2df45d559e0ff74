//! Synthetic emission phantoms: finite sums of planar Gaussians.
//!
//! Every component has a closed-form Fourier transform, Radon transform and
//! L1 mass, which makes each downstream identity testable against an
//! independent route. A component is treated as effectively supported in the
//! disk of radius `support_radius`: its center must keep six widths of
//! clearance from the boundary, leaving less than 2e-8 of the component mass
//! outside the disk.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quad;

/// Clearance multiple of the width required between a component center and
/// the support boundary.
pub const SUPPORT_CLEARANCE: f64 = 6.0;

/// One isotropic Gaussian `amplitude * exp(-|x - center|^2 / (2 width^2))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianComponent {
    pub center: [f64; 2],
    pub width: f64,
    pub amplitude: f64,
}

impl GaussianComponent {
    /// Distance from the origin beyond which this component is negligible.
    pub fn reach(&self) -> f64 {
        (self.center[0].hypot(self.center[1])) + SUPPORT_CLEARANCE * self.width
    }
}

/// A finite Gaussian sum, effectively supported in the disk of radius
/// `support_radius <= 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Phantom {
    components: Vec<GaussianComponent>,
    support_radius: f64,
}

/// L1 mass of a phantom. For mixed-sign amplitudes the closed form only
/// bounds the true norm from above, and `is_upper_bound` says so.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct L1Norm {
    pub value: f64,
    pub is_upper_bound: bool,
}

impl Phantom {
    /// Builds a phantom, validating widths and the support-clearance rule
    /// `|center| + 6 width <= support_radius` for every component.
    pub fn new(components: Vec<GaussianComponent>, support_radius: f64) -> Result<Self> {
        if !(support_radius > 0.0 && support_radius <= 1.0) {
            return Err(Error::domain(format!(
                "support_radius must lie in (0, 1], got {support_radius}"
            )));
        }
        for (i, c) in components.iter().enumerate() {
            if !(c.width > 0.0) || !c.width.is_finite() {
                return Err(Error::domain(format!(
                    "component {i}: width must be positive and finite, got {}",
                    c.width
                )));
            }
            if !c.amplitude.is_finite() || !c.center[0].is_finite() || !c.center[1].is_finite() {
                return Err(Error::domain(format!("component {i}: non-finite field")));
            }
            if c.reach() > support_radius {
                return Err(Error::domain(format!(
                    "component {i}: |center| + {SUPPORT_CLEARANCE} width = {} exceeds support_radius {}",
                    c.reach(),
                    support_radius
                )));
            }
        }
        Ok(Phantom {
            components,
            support_radius,
        })
    }

    /// The designated zero phantom (empty component list).
    pub fn zero(support_radius: f64) -> Result<Self> {
        Phantom::new(Vec::new(), support_radius)
    }

    pub fn components(&self) -> &[GaussianComponent] {
        &self.components
    }

    pub fn support_radius(&self) -> f64 {
        self.support_radius
    }

    /// Largest `reach` over components: distance from the origin beyond
    /// which the whole phantom is negligible. Zero for the zero phantom.
    pub fn reach(&self) -> f64 {
        self.components
            .iter()
            .map(|c| c.reach())
            .fold(0.0, f64::max)
    }

    /// Smallest component width, or `None` for the zero phantom.
    pub fn min_width(&self) -> Option<f64> {
        self.components
            .iter()
            .map(|c| c.width)
            .min_by(|a, b| a.total_cmp(b))
    }

    /// Pointwise evaluation `sum_j A_j exp(-|x - c_j|^2 / (2 sigma_j^2))`.
    pub fn eval(&self, x: [f64; 2]) -> f64 {
        self.components
            .iter()
            .map(|c| {
                let dx = x[0] - c.center[0];
                let dy = x[1] - c.center[1];
                c.amplitude * (-(dx * dx + dy * dy) / (2.0 * c.width * c.width)).exp()
            })
            .sum()
    }

    /// Fourier transform under the symmetric convention
    /// `fhat(xi) = (2 pi)^{-1} int f(x) e^{-i x.xi} dx`:
    /// `sum_j A_j sigma_j^2 exp(-sigma_j^2 |xi|^2 / 2) exp(-i c_j . xi)`.
    pub fn fourier(&self, xi: [f64; 2]) -> Complex64 {
        let n2 = xi[0] * xi[0] + xi[1] * xi[1];
        self.components
            .iter()
            .map(|c| {
                let radial = c.amplitude * c.width * c.width * (-c.width * c.width * n2 / 2.0).exp();
                let phase = -(c.center[0] * xi[0] + c.center[1] * xi[1]);
                Complex64::from_polar(radial, phase)
            })
            .fold(Complex64::new(0.0, 0.0), |a, b| a + b)
    }

    /// Upper bound for the band tail `int_{|xi| > b} |xi|^d |fhat(xi)| dxi`.
    ///
    /// By the triangle inequality the modulus is bounded by the sum of the
    /// component moduli, and each reduces to the radial integral
    /// `2 pi |A| sigma^2 int_b^inf rho^{d+1} exp(-sigma^2 rho^2 / 2) drho`,
    /// evaluated here to 1e-10 relative accuracy. Exact (not just an upper
    /// bound) for single-component phantoms.
    pub fn band_tail(&self, d: f64, b: f64) -> Result<f64> {
        if d < -1.0 {
            return Err(Error::domain(format!(
                "band_tail exponent d must be >= -1, got {d}"
            )));
        }
        if !(b > 0.0) {
            return Err(Error::domain(format!("band_tail requires b > 0, got {b}")));
        }
        let mut total = 0.0;
        for c in &self.components {
            let s2 = c.width * c.width;
            // integrand falls below 1e-300 once s^2 rho^2 / 2 - (d+1) ln rho > 691
            let cutoff = (2.0 * 760.0_f64).sqrt() / c.width;
            if b >= cutoff {
                continue;
            }
            let tail = quad::integrate_rel(
                |rho: f64| rho.powf(d + 1.0) * (-s2 * rho * rho / 2.0).exp(),
                b,
                cutoff,
                1e-10,
                64,
            );
            total += 2.0 * std::f64::consts::PI * c.amplitude.abs() * s2 * tail;
        }
        Ok(total)
    }

    /// `sum_j |A_j| 2 pi sigma_j^2`, exact when all amplitudes share a sign,
    /// otherwise an upper bound (flagged).
    pub fn l1_norm(&self) -> L1Norm {
        let value = self
            .components
            .iter()
            .map(|c| c.amplitude.abs() * 2.0 * std::f64::consts::PI * c.width * c.width)
            .sum();
        let pos = self.components.iter().any(|c| c.amplitude > 0.0);
        let neg = self.components.iter().any(|c| c.amplitude < 0.0);
        L1Norm {
            value,
            is_upper_bound: pos && neg,
        }
    }
}

/// Acquisition geometry: the vertex circle, the support disk, the essential
/// band limit and the oversampling parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geometry {
    /// Vertex-circle radius, > 1.
    pub r: f64,
    /// Support radius, in (0, 1].
    pub r0: f64,
    /// Essential band limit, > 1.
    pub b: f64,
    /// Oversampling parameter, in (0, 1); must satisfy 2 - theta^2 < r.
    pub theta: f64,
}

impl Geometry {
    pub fn new(r: f64, r0: f64, b: f64, theta: f64) -> Result<Self> {
        if !(r > 1.0) {
            return Err(Error::domain(format!("geometry requires r > 1, got {r}")));
        }
        if !(r0 > 0.0 && r0 <= 1.0) {
            return Err(Error::domain(format!(
                "geometry requires 0 < r0 <= 1, got {r0}"
            )));
        }
        if !(b > 1.0) {
            return Err(Error::domain(format!("geometry requires b > 1, got {b}")));
        }
        if !(theta > 0.0 && theta < 1.0) {
            return Err(Error::domain(format!(
                "geometry requires 0 < theta < 1, got {theta}"
            )));
        }
        if !(2.0 - theta * theta < r) {
            return Err(Error::domain(format!(
                "geometry requires 2 - theta^2 < r, got 2 - {theta}^2 = {} >= {r}",
                2.0 - theta * theta
            )));
        }
        Ok(Geometry { r, r0, b, theta })
    }

    /// Product `r b`, the radius of the spectrum diamond.
    pub fn rb(&self) -> f64 {
        self.r * self.b
    }

    /// `2 - theta^2`, the radius entering the vertex-region estimate.
    pub fn r_bar(&self) -> f64 {
        2.0 - self.theta * self.theta
    }

    /// Half-opening angle below which a V-line meets the support disk.
    pub fn psi_window(&self) -> f64 {
        (self.r0 / self.r).asin()
    }
}
