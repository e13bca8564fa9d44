//! Random geometric inputs for the unit tests.
//!
//! Points are generated by applying random isometries (built from random
//! frames via Gram-Schmidt on the Minkowski form) to the base point, which
//! guarantees the model invariants by construction.

use crate::hyperboloid::{Frame, HPoint, Isometry, Vec4};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_frame<R: Rng>(rng: &mut R) -> Frame {
    loop {
        let origin = Vec4::new(
            1.0 + rng.gen::<f64>() * 2.0,
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let dirs = [
            Vec4::new(
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
            ),
            Vec4::new(
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
            ),
            Vec4::new(
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
            ),
        ];
        if let Ok(f) = Frame::orthonormalize(origin, dirs) {
            return f;
        }
    }
}

pub fn random_isometry<R: Rng>(rng: &mut R) -> Isometry {
    let f1 = random_frame(rng);
    let f2 = random_frame(rng);
    Isometry::from_frames(&f1, &f2)
}

pub fn random_hpoint<R: Rng>(rng: &mut R) -> HPoint {
    random_isometry(rng).apply(&HPoint::origin())
}

/// Random point of the H^2 slice (x3 = 0), within a disc of the given radius
/// around the base point.
pub fn random_h2_point<R: Rng>(rng: &mut R, radius: f64) -> HPoint {
    let r = rng.gen_range(0.0..radius);
    let phi = rng.gen_range(0.0..core::f64::consts::TAU);
    let dir = Vec4::new(0.0, phi.cos(), phi.sin(), 0.0);
    crate::hyperboloid::geodesic_point(&HPoint::origin(), dir, r)
}
