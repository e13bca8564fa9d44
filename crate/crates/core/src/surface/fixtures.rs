//! Small closed surfaces used as fixtures: bipyramids over a polygon with a
//! common edge length, and the double of a single triangle.

use super::{PolyhedralSurface, Triangulation};
use crate::error::{Error, Result};
use crate::math;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

/// Side length of the equilateral hyperbolic triangle whose interior angle
/// is `angle`: `cosh s = cos A / (1 - cos A)`.
pub fn equilateral_side_for_angle(angle: f64) -> Result<f64> {
    if !(angle > 0.0 && angle < core::f64::consts::FRAC_PI_3) {
        return Err(Error::ParamRange(
            "equilateral hyperbolic angle must lie in (0, pi/3)",
        ));
    }
    let c = math::cos(angle);
    Ok(math::acosh(c / (1.0 - c)))
}

/// Double pyramid over a `k`-gon with every edge of length `side`: `2k`
/// equilateral faces, apex cone angles `k` times the face angle.
///
/// Vertex 0 is the upper apex, vertex 1 the lower apex, vertices `2..2+k`
/// the equator.
pub fn bipyramid(k: usize, side: f64) -> Result<PolyhedralSurface> {
    if k < 3 {
        return Err(Error::ParamRange("bipyramid needs at least a triangle"));
    }
    if !(side > 0.0) {
        return Err(Error::ParamRange("bipyramid side must be positive"));
    }
    let top = 0usize;
    let bottom = 1usize;
    let eq = |i: usize| 2 + (i % k);
    let mut triangles = Vec::with_capacity(2 * k);
    for i in 0..k {
        triangles.push([top, eq(i), eq(i + 1)]);
        triangles.push([bottom, eq(i + 1), eq(i)]);
    }
    let mut edge_lengths = BTreeMap::new();
    for t in &triangles {
        for (u, v) in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
            edge_lengths.insert(super::edge_key(u, v), side);
        }
    }
    PolyhedralSurface::new(Triangulation {
        vertex_count: 2 + k,
        triangles,
        edge_lengths,
        face_curvature: -1.0,
    })
}

/// The regular hyperbolic octahedron: a 4-gon bipyramid, eight equilateral
/// faces of the given side.
pub fn octahedron(side: f64) -> Result<PolyhedralSurface> {
    bipyramid(4, side)
}

/// Double of a single triangle: two faces glued along all three edges.
pub fn triangular_pillow(a: f64, b: f64, c: f64) -> Result<PolyhedralSurface> {
    let triangles = alloc::vec![[0usize, 1, 2], [0, 2, 1]];
    let mut edge_lengths = BTreeMap::new();
    edge_lengths.insert((0, 1), a);
    edge_lengths.insert((1, 2), b);
    edge_lengths.insert((0, 2), c);
    PolyhedralSurface::new(Triangulation {
        vertex_count: 3,
        triangles,
        edge_lengths,
        face_curvature: -1.0,
    })
}
