//! Numerical hyperbolic geometry in the hyperboloid model.
//!
//! The crate is organized around a handful of small kernels:
//!
//! - [`hyperboloid`] — the Minkowski form on R^{3,1}, points of H^3, tangent
//!   frames, and pseudo-orthogonal isometries (frame construction, probe
//!   reconstruction, group operations).
//! - [`models`] — Klein-ball conversions and the Euclidean homothety of the
//!   Klein model with its exact radial/perpendicular length-distortion
//!   factors.
//! - [`trig`] — closed-form hyperbolic plane trigonometry (equidistants,
//!   right triangles, laws of cosines, angle defects).
//! - [`plane`] — geodesic arithmetic on the H^2 slice (poles, feet,
//!   intersections, common perpendiculars).
//! - [`surface`] — polyhedral hyperbolic surfaces with cone singularities,
//!   comparison polyhedra built from distance oracles, and graph-refined
//!   intrinsic distances.
//! - [`cylinder`] — flattened fundamental domains of hyperbolic cylinders,
//!   the equal-angle axis geodesic, situation classification, and per-cylinder
//!   threshold formulas.
//! - [`bounds`] — the top-level closed-form separation bounds and covering
//!   constants.
//!
//! All computation is `f64`; the crate is `no_std` (with `alloc`) and keeps
//! IO, file formats, and randomized drivers in the companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod cylinder;
pub mod error;
pub mod hyperboloid;
pub(crate) mod math;
pub mod models;
pub mod plane;
pub mod quadrature;
pub mod surface;
#[cfg(test)]
pub(crate) mod testutil;
pub mod trig;

pub use error::Error;
pub use hyperboloid::ModelConfig;
