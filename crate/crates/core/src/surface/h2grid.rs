//! The built-in `h2-grid` oracle: a geodesic net on a fundamental square of
//! the hyperbolic plane, closed up as the double of the square and carrying
//! the metric scaled by `lambda >= 1`.
//!
//! The square is the regular geodesic quadrilateral of the given
//! circumradius. Its double (two mirror copies glued along the boundary) is
//! a closed Alexandrov surface: curvature `-1/lambda >= -1` away from the
//! four corner cone points. Same-copy distances are exact chord distances
//! (the square is convex, and excursions into the other copy reflect back);
//! cross-copy distances are the minimum over single-seam unfoldings and
//! corner detours, which is tight for the pair ranges used here.
//!
//! With `lambda > 1` the comparison polyhedron of this oracle has interior
//! cone angles strictly below 2 pi by an amount that shrinks with the grid
//! step, which is what the refinement studies measure.

use super::{Combinatorics, DistanceOracle};
use crate::error::{Error, Result};
use crate::hyperboloid::{dist, geodesic_lerp, geodesic_point, mdot, HPoint, Vec4};
use crate::math;
use crate::plane::Geodesic;
use alloc::vec::Vec;

/// Parameters of the built-in oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct H2GridParams {
    /// Grid cells per side; the net has (m+1)^2 vertices per copy.
    pub m: usize,
    /// Circumradius of the fundamental square.
    pub radius: f64,
    /// Metric scale; lambda = 1 gives the genuinely hyperbolic square.
    pub lambda: f64,
}

impl Default for H2GridParams {
    fn default() -> Self {
        Self {
            m: 4,
            radius: 1.0,
            lambda: 4.0,
        }
    }
}

/// The instantiated net: vertex ids, chart positions, combinatorics, and the
/// distance oracle over the double.
pub struct H2Grid {
    params: H2GridParams,
    /// Chart position of every vertex (copy B vertices share their twin's
    /// position).
    positions: Vec<HPoint>,
    /// Copy tag per vertex: 0 = copy A or seam, 1 = copy B interior.
    copy_b: Vec<bool>,
    seam: Vec<bool>,
    combinatorics: Combinatorics,
    sides: [Geodesic; 4],
    side_endpoints: [(HPoint, HPoint); 4],
    corners: [HPoint; 4],
}

impl H2Grid {
    pub fn new(params: H2GridParams) -> Result<Self> {
        if params.m < 2 {
            return Err(Error::ParamRange("h2-grid needs at least 2 cells per side"));
        }
        if !(params.radius > 0.0 && params.radius < 5.0) {
            return Err(Error::ParamRange("h2-grid radius must lie in (0, 5)"));
        }
        if !(params.lambda >= 1.0) {
            return Err(Error::ParamRange("h2-grid lambda must be >= 1"));
        }
        let m = params.m;
        let o = HPoint::origin();
        let corner = |phi: f64| {
            let dir = Vec4::new(0.0, math::cos(phi), math::sin(phi), 0.0);
            geodesic_point(&o, dir, params.radius)
        };
        // SW, SE, NE, NW.
        let q = core::f64::consts::FRAC_PI_4;
        let c_sw = corner(-3.0 * q);
        let c_se = corner(-q);
        let c_ne = corner(q);
        let c_nw = corner(3.0 * q);

        // P(u, v): geodesic interpolation between the left and right sides.
        let point_at = |iu: usize, jv: usize| -> HPoint {
            let u = iu as f64 / m as f64;
            let v = jv as f64 / m as f64;
            let left = geodesic_lerp(&c_sw, &c_nw, v);
            let right = geodesic_lerp(&c_se, &c_ne, v);
            geodesic_lerp(&left, &right, u)
        };

        let per_copy = (m + 1) * (m + 1);
        let a_id = |i: usize, j: usize| i * (m + 1) + j;
        let on_boundary = |i: usize, j: usize| i == 0 || j == 0 || i == m || j == m;
        // Copy B reuses seam vertices; its interior vertices come after.
        let b_id = |i: usize, j: usize| -> usize {
            if on_boundary(i, j) {
                a_id(i, j)
            } else {
                per_copy + (i - 1) * (m - 1) + (j - 1)
            }
        };

        let vertex_count = per_copy + (m - 1) * (m - 1);
        let mut positions = alloc::vec![HPoint::origin(); vertex_count];
        let mut copy_b = alloc::vec![false; vertex_count];
        let mut seam = alloc::vec![false; vertex_count];
        for i in 0..=m {
            for j in 0..=m {
                positions[a_id(i, j)] = point_at(i, j);
                seam[a_id(i, j)] = on_boundary(i, j);
                if !on_boundary(i, j) {
                    positions[b_id(i, j)] = point_at(i, j);
                    copy_b[b_id(i, j)] = true;
                }
            }
        }

        let mut triangles = Vec::with_capacity(4 * m * m);
        for i in 0..m {
            for j in 0..m {
                triangles.push([a_id(i, j), a_id(i + 1, j), a_id(i + 1, j + 1)]);
                triangles.push([a_id(i, j), a_id(i + 1, j + 1), a_id(i, j + 1)]);
                // Mirror copy with reversed orientation.
                triangles.push([b_id(i, j), b_id(i + 1, j + 1), b_id(i + 1, j)]);
                triangles.push([b_id(i, j), b_id(i, j + 1), b_id(i + 1, j + 1)]);
            }
        }

        let side_pairs = [
            (c_sw, c_se),
            (c_se, c_ne),
            (c_ne, c_nw),
            (c_nw, c_sw),
        ];
        let mut sides = Vec::with_capacity(4);
        for (p, q) in &side_pairs {
            sides.push(Geodesic::through(p, q)?);
        }

        Ok(Self {
            params,
            positions,
            copy_b,
            seam,
            combinatorics: Combinatorics {
                vertex_count,
                triangles,
            },
            sides: [sides[0], sides[1], sides[2], sides[3]],
            side_endpoints: side_pairs,
            corners: [c_sw, c_se, c_ne, c_nw],
        })
    }

    pub fn params(&self) -> &H2GridParams {
        &self.params
    }

    pub fn combinatorics(&self) -> &Combinatorics {
        &self.combinatorics
    }

    /// Vertices strictly inside either copy (not on the seam); the genuine
    /// metric is smooth there, so comparison cone angles approach 2 pi.
    pub fn interior_vertices(&self) -> Vec<usize> {
        (0..self.combinatorics.vertex_count)
            .filter(|&v| !self.seam[v])
            .collect()
    }

    /// Deterministic list of same-copy non-edge pairs for deviation studies:
    /// all pairs at grid Chebyshev distance two, plus the copy-A diagonal.
    pub fn declared_pairs(&self) -> Vec<(usize, usize)> {
        let m = self.params.m;
        let a_id = |i: usize, j: usize| i * (m + 1) + j;
        let mut pairs = Vec::new();
        for i in 0..=m {
            for j in 0..=m {
                if i + 2 <= m {
                    pairs.push((a_id(i, j), a_id(i + 2, j)));
                }
                if j + 2 <= m {
                    pairs.push((a_id(i, j), a_id(i, j + 2)));
                }
                if i + 2 <= m && j + 2 <= m {
                    pairs.push((a_id(i, j), a_id(i + 2, j + 2)));
                }
                if i + 2 <= m && j >= 2 {
                    pairs.push((a_id(i, j), a_id(i + 2, j - 2)));
                }
            }
        }
        pairs.push((a_id(0, 0), a_id(m, m)));
        pairs
    }

    fn chord(&self, u: usize, v: usize) -> f64 {
        math::sqrt(self.params.lambda) * dist(&self.positions[u], &self.positions[v])
    }

    /// Reflection of a point across one of the side geodesics.
    fn reflect(&self, side: usize, p: &HPoint) -> HPoint {
        let n = self.sides[side].pole();
        let s = mdot(p.vec(), n);
        HPoint::project(p.vec() - n * (2.0 * s)).expect("reflection stays on the sheet")
    }

    /// True when the chord from `a` to `b` crosses the open side segment.
    fn crosses_side(&self, side: usize, a: &HPoint, b: &HPoint) -> bool {
        let g = &self.sides[side];
        let sa = g.sinh_signed_dist(a);
        let sb = g.sinh_signed_dist(b);
        if sa * sb >= 0.0 {
            return false;
        }
        let Ok(chord) = Geodesic::through(a, b) else {
            return false;
        };
        let Ok(x) = g.intersect(&chord) else {
            return false;
        };
        let (p, q) = &self.side_endpoints[side];
        let len = dist(p, q);
        dist(p, &x) < len && dist(q, &x) < len
    }
}

impl DistanceOracle for H2Grid {
    fn vertex_count(&self) -> usize {
        self.combinatorics.vertex_count
    }

    fn distance(&self, u: usize, v: usize) -> Result<f64> {
        let n = self.combinatorics.vertex_count;
        if u >= n || v >= n {
            return Err(Error::BadVertex {
                index: u.max(v),
                count: n,
            });
        }
        if u == v {
            return Ok(0.0);
        }
        let cross_copy =
            self.copy_b[u] != self.copy_b[v] && !self.seam[u] && !self.seam[v];
        if !cross_copy {
            return Ok(self.chord(u, v));
        }
        // Opposite interiors: unfold across each seam side, fall back to
        // corner detours.
        let pu = self.positions[u];
        let pv = self.positions[v];
        let mut best = f64::INFINITY;
        for side in 0..4 {
            let q = self.reflect(side, &pv);
            if self.crosses_side(side, &pu, &q) {
                best = best.min(dist(&pu, &q));
            }
        }
        for corner in &self.corners {
            best = best.min(dist(&pu, corner) + dist(corner, &pv));
        }
        Ok(math::sqrt(self.params.lambda) * best)
    }
}
