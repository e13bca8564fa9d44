//! Geodesic arithmetic on the H^2 slice (x3 = 0) of the hyperboloid model.
//!
//! A geodesic of H^2 is encoded by its pole: the unit spacelike vector `n`
//! with `<n,n>_M = 1` whose Minkowski-orthogonal complement cuts the
//! geodesic out of the sheet. Signed distances, feet of perpendiculars,
//! intersections, and common perpendiculars all reduce to products with the
//! pole.

use crate::error::{Error, Result};
use crate::hyperboloid::{mdot, HPoint, Vec4};
use crate::math;

/// Lorentz cross product on the x3 = 0 slice: the vector Minkowski-orthogonal
/// to both arguments (their x3 components are ignored).
pub fn slice_cross(u: Vec4, v: Vec4) -> Vec4 {
    // Euclidean cross of (x0,x1,x2), then lower the timelike index.
    let c0 = u.x1 * v.x2 - u.x2 * v.x1;
    let c1 = u.x2 * v.x0 - u.x0 * v.x2;
    let c2 = u.x0 * v.x1 - u.x1 * v.x0;
    Vec4::new(-c0, c1, c2, 0.0)
}

/// An (unoriented up to pole sign) geodesic of the H^2 slice.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geodesic {
    pole: Vec4,
}

impl Geodesic {
    /// Geodesic through two distinct points of the slice.
    pub fn through(p: &HPoint, q: &HPoint) -> Result<Geodesic> {
        let n = slice_cross(p.vec(), q.vec());
        let n2 = mdot(n, n);
        if n2 <= 1e-28 {
            return Err(Error::ParamRange(
                "geodesic through coincident or antipodal points",
            ));
        }
        Ok(Geodesic {
            pole: n * (1.0 / math::sqrt(n2)),
        })
    }

    /// Geodesic through `p` with unit tangent `dir`.
    pub fn through_direction(p: &HPoint, dir: Vec4) -> Result<Geodesic> {
        let n = slice_cross(p.vec(), dir);
        let n2 = mdot(n, n);
        if n2 <= 1e-28 {
            return Err(Error::ParamRange("degenerate direction for geodesic"));
        }
        Ok(Geodesic {
            pole: n * (1.0 / math::sqrt(n2)),
        })
    }

    pub fn pole(&self) -> Vec4 {
        self.pole
    }

    /// sinh of the signed distance from `p` to the geodesic; the sign picks
    /// out the half-plane.
    pub fn sinh_signed_dist(&self, p: &HPoint) -> f64 {
        mdot(p.vec(), self.pole)
    }

    /// Unsigned distance from `p` to the geodesic.
    pub fn dist_to(&self, p: &HPoint) -> f64 {
        math::asinh(math::abs(self.sinh_signed_dist(p)))
    }

    /// Foot of the perpendicular from `p`.
    pub fn foot(&self, p: &HPoint) -> HPoint {
        let s = self.sinh_signed_dist(p);
        // p - <p,n> n is timelike with norm -(1 + s^2).
        HPoint::project(p.vec() - self.pole * s).expect("foot projection is timelike")
    }

    /// `<n1,n2>_M` of the two poles; |.| < 1 means the geodesics cross,
    /// |.| = 1 asymptotic, |.| > 1 ultraparallel.
    pub fn pole_product(&self, other: &Geodesic) -> f64 {
        mdot(self.pole, other.pole)
    }

    /// Intersection point of two crossing geodesics.
    pub fn intersect(&self, other: &Geodesic) -> Result<HPoint> {
        let x = slice_cross(self.pole, other.pole);
        let n2 = mdot(x, x);
        if n2 >= 0.0 {
            return Err(Error::BoundaryGeodesicsNotUltraparallel {
                pole_product: self.pole_product(other),
            });
        }
        let s = 1.0 / math::sqrt(-n2);
        let v = if x.x0 > 0.0 { x * s } else { x * (-s) };
        HPoint::new(v, 1e-6)
    }

    /// Common perpendicular of two ultraparallel geodesics.
    pub fn common_perpendicular(&self, other: &Geodesic) -> Result<Geodesic> {
        let x = slice_cross(self.pole, other.pole);
        let n2 = mdot(x, x);
        if n2 <= 0.0 {
            return Err(Error::BoundaryGeodesicsNotUltraparallel {
                pole_product: self.pole_product(other),
            });
        }
        Ok(Geodesic {
            pole: x * (1.0 / math::sqrt(n2)),
        })
    }

    /// Acute intersection angle with another geodesic at their crossing
    /// point, in (0, pi/2].
    pub fn angle_with(&self, other: &Geodesic) -> Result<f64> {
        let c = self.pole_product(other);
        if math::abs(c) >= 1.0 {
            return Err(Error::BoundaryGeodesicsNotUltraparallel { pole_product: c });
        }
        // Angle between the lines is arccos |<n1,n2>|.
        Ok(math::acos(math::abs(c).min(1.0)))
    }
}

/// Unit tangent of the slice at `p`, rotated `phi` from the direction toward
/// the positive x1 axis... strictly: direction with tangent-plane angle `phi`
/// in the (e1, e2) parallel field at the base point. Useful for fixtures.
pub fn slice_direction(p: &HPoint, phi: f64) -> Vec4 {
    // Orthonormalize E1, E2 against p within the slice.
    let v = p.vec();
    let mut u1 = Vec4::E1 + v * mdot(v, Vec4::E1);
    let n1 = math::sqrt(mdot(u1, u1));
    u1 = u1 * (1.0 / n1);
    let mut u2 = Vec4::E2 + v * mdot(v, Vec4::E2);
    u2 = u2 - u1 * mdot(u1, u2);
    let n2 = math::sqrt(mdot(u2, u2));
    u2 = u2 * (1.0 / n2);
    u1 * math::cos(phi) + u2 * math::sin(phi)
}
