//! Numerics for the V-line transform with vertices on a circle.
//!
//! The data function is `g(phi, psi) = Vf(phi, psi)`: the integral of a
//! planar emission function over the two rays leaving the vertex
//! `r theta(phi)` at half-opening `psi`, with the bisector through the
//! origin. The crate provides
//!
//! * Gaussian [`phantom`]s with closed-form Fourier/Radon transforms,
//! * the [`transform`]s themselves plus the even biperiodic extension of g,
//! * sampling [`lattice`]s, their cosets and the spectrum set K,
//! * Fourier coefficients of g via two independent routes ([`spectrum`]),
//! * the Shannon-type sampling series and its sup error ([`sampler`]),
//! * the standard and interlaced detector [`scheme`]s with sample budgets,
//! * the explicit error-bound functions ([`bounds`]),
//! * a small CLI driver (`vline`) emitting deterministic CSV tables.
//!
//! Start with the runnable examples (`cargo run --release --example ...`)
//! for end-to-end usage of each capability.

// validation uses `!(x > 0.0)` style comparisons so NaN inputs fail too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bessel;
pub mod bounds;
pub mod cli;
pub mod config;
pub mod error;
pub mod lattice;
pub mod phantom;
pub mod quad;
pub mod report;
pub mod sampler;
pub mod scheme;
pub mod spectrum;
pub mod transform;

pub use error::{Error, Result};
pub use phantom::{GaussianComponent, Geometry, Phantom};
