//! The hyperboloid model of H^3: Minkowski form, points, tangent frames, and
//! pseudo-orthogonal isometries.
//!
//! Points live on the upper sheet `{ <x,x>_M = -1, x0 > 0 }` of R^{3,1} with
//! the Minkowski product `<x,y>_M = -x0 y0 + x1 y1 + x2 y2 + x3 y3`. The
//! isometries of H^3 are the pseudo-orthogonal matrices that preserve the
//! upper cone. H^2 is the x3 = 0 slice of the same types; there is no
//! separate lower-dimensional code path.

use crate::error::{Error, Result};
use crate::math;
use core::ops::{Add, Mul, Neg, Sub};

/// Numeric configuration shared by the kernels.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ModelConfig {
    /// Absolute tolerance for model invariants: unit norms, tangency,
    /// pseudo-orthogonality residuals.
    pub tol_model: f64,
    /// Margulis constant of H^3. No exact value is published; 0.104 is a
    /// conventional lower bound used as the default.
    pub margulis_eps: f64,
}

impl Default for ModelConfig {
    fn default() -> Self {
        Self {
            tol_model: 1e-9,
            margulis_eps: 0.104,
        }
    }
}

/// A vector of the pseudo-Euclidean space R^{3,1}.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Vec4 {
    pub x0: f64,
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl Vec4 {
    pub const fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        Self { x0, x1, x2, x3 }
    }

    pub const ZERO: Vec4 = Vec4::new(0.0, 0.0, 0.0, 0.0);
    /// Standard basis: E0 is the hyperboloid base point, E1..E3 span its
    /// tangent space.
    pub const E0: Vec4 = Vec4::new(1.0, 0.0, 0.0, 0.0);
    pub const E1: Vec4 = Vec4::new(0.0, 1.0, 0.0, 0.0);
    pub const E2: Vec4 = Vec4::new(0.0, 0.0, 1.0, 0.0);
    pub const E3: Vec4 = Vec4::new(0.0, 0.0, 0.0, 1.0);

    pub fn is_finite(&self) -> bool {
        self.x0.is_finite() && self.x1.is_finite() && self.x2.is_finite() && self.x3.is_finite()
    }

    /// Largest absolute component.
    pub fn max_abs(&self) -> f64 {
        math::abs(self.x0)
            .max(math::abs(self.x1))
            .max(math::abs(self.x2))
            .max(math::abs(self.x3))
    }
}

impl Add for Vec4 {
    type Output = Vec4;
    fn add(self, rhs: Vec4) -> Vec4 {
        Vec4::new(
            self.x0 + rhs.x0,
            self.x1 + rhs.x1,
            self.x2 + rhs.x2,
            self.x3 + rhs.x3,
        )
    }
}

impl Sub for Vec4 {
    type Output = Vec4;
    fn sub(self, rhs: Vec4) -> Vec4 {
        Vec4::new(
            self.x0 - rhs.x0,
            self.x1 - rhs.x1,
            self.x2 - rhs.x2,
            self.x3 - rhs.x3,
        )
    }
}

impl Mul<f64> for Vec4 {
    type Output = Vec4;
    fn mul(self, s: f64) -> Vec4 {
        Vec4::new(self.x0 * s, self.x1 * s, self.x2 * s, self.x3 * s)
    }
}

impl Neg for Vec4 {
    type Output = Vec4;
    fn neg(self) -> Vec4 {
        Vec4::new(-self.x0, -self.x1, -self.x2, -self.x3)
    }
}

/// Minkowski scalar product `-x0 y0 + x1 y1 + x2 y2 + x3 y3`.
#[inline]
pub fn mdot(u: Vec4, v: Vec4) -> f64 {
    -u.x0 * v.x0 + u.x1 * v.x1 + u.x2 * v.x2 + u.x3 * v.x3
}

/// A point of H^3 in the hyperboloid model: `<v,v>_M = -1`, `v.x0 > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HPoint {
    v: Vec4,
}

impl HPoint {
    /// The base point (1, 0, 0, 0).
    pub const fn origin() -> Self {
        Self { v: Vec4::E0 }
    }

    /// Validates the invariants at the given absolute tolerance.
    pub fn new(v: Vec4, tol: f64) -> Result<Self> {
        let norm = mdot(v, v);
        if !v.is_finite() || math::abs(norm + 1.0) > tol || v.x0 <= 0.0 {
            return Err(Error::InvalidPoint {
                norm,
                x0: v.x0,
                tol,
            });
        }
        Ok(Self { v })
    }

    /// Lifts spatial coordinates onto the upper sheet.
    pub fn from_space(x1: f64, x2: f64, x3: f64) -> Self {
        let x0 = math::sqrt(1.0 + x1 * x1 + x2 * x2 + x3 * x3);
        Self {
            v: Vec4::new(x0, x1, x2, x3),
        }
    }

    /// Rescales a timelike upper-cone vector onto the sheet.
    pub fn project(v: Vec4) -> Result<Self> {
        let norm = mdot(v, v);
        if !(norm < 0.0) || v.x0 <= 0.0 {
            return Err(Error::InvalidPoint {
                norm,
                x0: v.x0,
                tol: 0.0,
            });
        }
        let s = 1.0 / math::sqrt(-norm);
        Ok(Self { v: v * s })
    }

    pub(crate) const fn new_unchecked(v: Vec4) -> Self {
        Self { v }
    }

    pub fn vec(&self) -> Vec4 {
        self.v
    }

    /// Whether the point lies in the H^2 slice x3 = 0.
    pub fn in_h2(&self, tol: f64) -> bool {
        math::abs(self.v.x3) <= tol
    }

    /// Residual of the sheet invariant, `|<v,v>_M + 1|`.
    pub fn invariant_residual(&self) -> f64 {
        math::abs(mdot(self.v, self.v) + 1.0)
    }
}

/// Hyperbolic distance `arcosh(max(1, -<p,q>_M))`.
pub fn dist(p: &HPoint, q: &HPoint) -> f64 {
    let c = -mdot(p.v, q.v);
    math::acosh(c.max(1.0))
}

/// A tangent vector at a base point: `<base, v>_M = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentVec {
    base: HPoint,
    v: Vec4,
}

impl TangentVec {
    pub fn new(base: HPoint, v: Vec4, tol: f64) -> Result<Self> {
        let residual = mdot(base.v, v);
        if !v.is_finite() || math::abs(residual) > tol {
            return Err(Error::InvalidTangent { residual, tol });
        }
        Ok(Self { base, v })
    }

    pub fn base(&self) -> HPoint {
        self.base
    }

    pub fn vec(&self) -> Vec4 {
        self.v
    }

    /// Minkowski norm; tangent vectors are spacelike, so this is real.
    pub fn norm(&self) -> f64 {
        math::sqrt(mdot(self.v, self.v).max(0.0))
    }
}

/// An orthonormal tangent frame: a base point together with three unit
/// tangent vectors that are pairwise Minkowski-orthogonal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame {
    origin: HPoint,
    basis: [Vec4; 3],
}

impl Frame {
    pub fn new(origin: HPoint, basis: [Vec4; 3], tol: f64) -> Result<Self> {
        for (i, e) in basis.iter().enumerate() {
            if math::abs(mdot(origin.v, *e)) > tol {
                return Err(Error::InvalidFrame("basis vector not tangent at origin"));
            }
            if math::abs(mdot(*e, *e) - 1.0) > tol {
                return Err(Error::InvalidFrame("basis vector not unit"));
            }
            for e2 in basis.iter().skip(i + 1) {
                if math::abs(mdot(*e, *e2)) > tol {
                    return Err(Error::InvalidFrame("basis vectors not orthogonal"));
                }
            }
        }
        Ok(Self { origin, basis })
    }

    /// The frame at the base point with the spatial standard basis.
    pub fn standard() -> Self {
        Self {
            origin: HPoint::origin(),
            basis: [Vec4::E1, Vec4::E2, Vec4::E3],
        }
    }

    /// Builds a frame by Gram-Schmidt on the Minkowski form.
    ///
    /// `origin_dir` must be timelike with positive x0; the three direction
    /// vectors are projected onto the tangent space and orthonormalized in
    /// order. Fails if the inputs are linearly dependent within rounding.
    pub fn orthonormalize(origin_dir: Vec4, dirs: [Vec4; 3]) -> Result<Self> {
        let origin = HPoint::project(origin_dir)?;
        let mut basis = [Vec4::ZERO; 3];
        for (k, d) in dirs.iter().enumerate() {
            // Project out the origin and the previously accepted vectors.
            let mut v = *d + origin.v * mdot(origin.v, *d);
            for b in basis.iter().take(k) {
                v = v - *b * mdot(*b, v);
            }
            let n2 = mdot(v, v);
            if n2 <= 1e-14 * d.max_abs().max(1.0) {
                return Err(Error::InvalidFrame(
                    "direction vectors are linearly dependent",
                ));
            }
            basis[k] = v * (1.0 / math::sqrt(n2));
        }
        Ok(Self { origin, basis })
    }

    pub fn origin(&self) -> HPoint {
        self.origin
    }

    pub fn basis(&self) -> [Vec4; 3] {
        self.basis
    }
}

/// A pseudo-orthogonal transform of R^{3,1} preserving the upper cone,
/// stored as a row-major 4x4 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Isometry {
    m: [[f64; 4]; 4],
}

/// Max-norm residual of `m^T J m - J` with `J = diag(-1, 1, 1, 1)`.
pub fn pseudo_orthogonality_residual(m: &[[f64; 4]; 4]) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..4 {
        for j in 0..4 {
            // (m^T J m)_{ij} = sum_k m_{ki} J_{kk} m_{kj}
            let mut s = -m[0][i] * m[0][j];
            for k in 1..4 {
                s += m[k][i] * m[k][j];
            }
            let target = if i == j {
                if i == 0 {
                    -1.0
                } else {
                    1.0
                }
            } else {
                0.0
            };
            worst = worst.max(math::abs(s - target));
        }
    }
    worst
}

/// True iff `m` preserves the Minkowski form within `tol` and maps the upper
/// cone to itself.
pub fn is_pseudo_orthogonal(m: &[[f64; 4]; 4], tol: f64) -> bool {
    pseudo_orthogonality_residual(m) <= tol && m[0][0] > 0.0
}

impl Isometry {
    pub const fn identity() -> Self {
        let mut m = [[0.0; 4]; 4];
        m[0][0] = 1.0;
        m[1][1] = 1.0;
        m[2][2] = 1.0;
        m[3][3] = 1.0;
        Self { m }
    }

    /// Validates pseudo-orthogonality and upper-cone preservation.
    pub fn new(m: [[f64; 4]; 4], tol: f64) -> Result<Self> {
        let residual = pseudo_orthogonality_residual(&m);
        if residual > tol || m[0][0] <= 0.0 {
            return Err(Error::NotPseudoOrthogonal { residual, tol });
        }
        Ok(Self { m })
    }

    pub(crate) const fn new_unchecked(m: [[f64; 4]; 4]) -> Self {
        Self { m }
    }

    pub fn matrix(&self) -> &[[f64; 4]; 4] {
        &self.m
    }

    /// Matrix built from four column vectors.
    pub fn from_columns(cols: [Vec4; 4], tol: f64) -> Result<Self> {
        let mut m = [[0.0; 4]; 4];
        for (j, c) in cols.iter().enumerate() {
            m[0][j] = c.x0;
            m[1][j] = c.x1;
            m[2][j] = c.x2;
            m[3][j] = c.x3;
        }
        Self::new(m, tol)
    }

    pub fn column(&self, j: usize) -> Vec4 {
        Vec4::new(self.m[0][j], self.m[1][j], self.m[2][j], self.m[3][j])
    }

    fn act(&self, v: Vec4) -> Vec4 {
        let x = [v.x0, v.x1, v.x2, v.x3];
        let mut out = [0.0; 4];
        for i in 0..4 {
            out[i] = self.m[i][0] * x[0] + self.m[i][1] * x[1] + self.m[i][2] * x[2]
                + self.m[i][3] * x[3];
        }
        Vec4::new(out[0], out[1], out[2], out[3])
    }

    /// Image of a hyperboloid point.
    pub fn apply(&self, p: &HPoint) -> HPoint {
        HPoint { v: self.act(p.v) }
    }

    /// Push-forward of a tangent vector (same linear action on both parts).
    pub fn apply_tangent(&self, t: &TangentVec) -> TangentVec {
        TangentVec {
            base: self.apply(&t.base),
            v: self.act(t.v),
        }
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &Isometry) -> Isometry {
        let mut m = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                let mut s = 0.0;
                for k in 0..4 {
                    s += self.m[i][k] * other.m[k][j];
                }
                m[i][j] = s;
            }
        }
        Isometry { m }
    }

    /// Group inverse. For pseudo-orthogonal `m` this is `J m^T J`, which is
    /// exact up to one sign flip per entry.
    pub fn inverse(&self) -> Isometry {
        let mut m = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                let sign = if (i == 0) ^ (j == 0) { -1.0 } else { 1.0 };
                m[i][j] = sign * self.m[j][i];
            }
        }
        Isometry { m }
    }

    /// The unique isometry sending one orthonormal frame to another.
    ///
    /// With `M1 = (y1, e1, e2, e3)` and `M2 = (y2, ê1, ê2, ê3)` as column
    /// matrices, the result is `M2 . M1^{-1}`; it maps `f1.origin` to
    /// `f2.origin` and each basis vector correspondingly.
    pub fn from_frames(f1: &Frame, f2: &Frame) -> Isometry {
        let m1 = Isometry::columns_of(f1);
        let m2 = Isometry::columns_of(f2);
        m2.compose(&m1.inverse())
    }

    fn columns_of(f: &Frame) -> Isometry {
        let o = f.origin.v;
        let [e1, e2, e3] = f.basis;
        let mut m = [[0.0; 4]; 4];
        for (j, c) in [o, e1, e2, e3].iter().enumerate() {
            m[0][j] = c.x0;
            m[1][j] = c.x1;
            m[2][j] = c.x2;
            m[3][j] = c.x3;
        }
        Isometry { m }
    }

    /// The four probe points whose images determine an isometry: the base
    /// point and its unit displacements along the three spatial axes.
    pub fn probes() -> [HPoint; 4] {
        let r = math::sqrt(2.0);
        [
            HPoint::origin(),
            HPoint::new_unchecked(Vec4::new(r, 1.0, 0.0, 0.0)),
            HPoint::new_unchecked(Vec4::new(r, 0.0, 1.0, 0.0)),
            HPoint::new_unchecked(Vec4::new(r, 0.0, 0.0, 1.0)),
        ]
    }

    /// Rebuilds an isometry from the images of [`Isometry::probes`].
    ///
    /// Column 0 is the image of the base probe; column k is
    /// `image(P_k) - sqrt(2) . image(P_0)`. Fails if the resulting matrix is
    /// not pseudo-orthogonal at `tol`, which signals inconsistent images.
    pub fn reconstruct_from_probes(images: &[HPoint; 4], tol: f64) -> Result<Isometry> {
        let r = math::sqrt(2.0);
        let c0 = images[0].v;
        let cols = [
            c0,
            images[1].v - c0 * r,
            images[2].v - c0 * r,
            images[3].v - c0 * r,
        ];
        Isometry::from_columns(cols, tol)
    }
}

/// Point at arclength `t` along the geodesic through `p` with unit tangent
/// direction `dir`.
pub fn geodesic_point(p: &HPoint, dir: Vec4, t: f64) -> HPoint {
    HPoint {
        v: p.v * math::cosh(t) + dir * math::sinh(t),
    }
}

/// Unit tangent at `p` pointing toward `q`. Fails for coincident points.
pub fn direction(p: &HPoint, q: &HPoint) -> Result<Vec4> {
    let c = -mdot(p.v, q.v);
    // Tangent projection of q at p; <u,p>_M = 0 and <u,u>_M = c^2 - 1.
    let u = q.v - p.v * c;
    let n2 = mdot(u, u);
    if n2 <= 0.0 {
        return Err(Error::ParamRange("direction of coincident points"));
    }
    Ok(u * (1.0 / math::sqrt(n2)))
}

/// Point at parameter `t` in [0,1] along the geodesic from `p` to `q`.
pub fn geodesic_lerp(p: &HPoint, q: &HPoint, t: f64) -> HPoint {
    let d = dist(p, q);
    if d == 0.0 {
        return *p;
    }
    let s = math::sinh(d);
    HPoint::project(p.v * (math::sinh((1.0 - t) * d) / s) + q.v * (math::sinh(t * d) / s))
        .unwrap_or(*p)
}

/// Hyperbolic midpoint of `p` and `q`.
pub fn midpoint(p: &HPoint, q: &HPoint) -> HPoint {
    HPoint::project(p.v + q.v).unwrap_or(*p)
}
