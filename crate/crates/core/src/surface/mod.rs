//! Polyhedral hyperbolic surfaces: glued triangles with per-edge lengths and
//! cone singularities, comparison polyhedra built from distance oracles, and
//! intrinsic distances through a refined subdivision graph.
//!
//! A surface is a closed orientable triangle complex together with one
//! hyperbolic length per undirected edge and a common face curvature
//! (`-1` unless the surface was rescaled). A triangle of curvature `K < 0`
//! with sides `s` is isometric to the curvature `-1` triangle with sides
//! `s * sqrt(-K)`, which is how every angle and area below is computed; the
//! rescaling is exact, not an approximation.

mod fixtures;
mod graph;
mod h2grid;

pub use fixtures::{bipyramid, equilateral_side_for_angle, octahedron, triangular_pillow};
pub use graph::SubdivisionGraph;
pub use h2grid::{H2Grid, H2GridParams};

use crate::error::{Error, Result};
use crate::math;
use crate::trig::{self, TriangleSides, Vertex};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

/// Canonical undirected key for an edge.
#[inline]
pub fn edge_key(u: usize, v: usize) -> (usize, usize) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Triangle complex combinatorics without metric data.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Combinatorics {
    pub vertex_count: usize,
    pub triangles: Vec<[usize; 3]>,
}

impl Combinatorics {
    /// The undirected edges of the complex, each listed once.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut set = alloc::collections::BTreeSet::new();
        for t in &self.triangles {
            set.insert(edge_key(t[0], t[1]));
            set.insert(edge_key(t[1], t[2]));
            set.insert(edge_key(t[2], t[0]));
        }
        set.into_iter().collect()
    }
}

/// A triangulated surface with hyperbolic edge lengths.
#[derive(Debug, Clone, PartialEq)]
pub struct Triangulation {
    pub vertex_count: usize,
    pub triangles: Vec<[usize; 3]>,
    /// One length per undirected edge, keyed by `(min, max)` vertex pair.
    pub edge_lengths: BTreeMap<(usize, usize), f64>,
    /// Sectional curvature of the faces; `-1` for genuinely hyperbolic ones.
    pub face_curvature: f64,
}

impl Triangulation {
    /// Assembles a triangulation from an explicit edge list, rejecting
    /// duplicate entries that disagree on the length.
    pub fn from_parts(
        vertex_count: usize,
        triangles: Vec<[usize; 3]>,
        edges: &[(usize, usize, f64)],
        face_curvature: f64,
    ) -> Result<Self> {
        let mut edge_lengths = BTreeMap::new();
        for &(u, v, len) in edges {
            let key = edge_key(u, v);
            if let Some(&prev) = edge_lengths.get(&key) {
                if prev != len {
                    return Err(Error::InvalidSurface(format!(
                        "edge ({}, {}) listed with two lengths: {} and {}",
                        key.0, key.1, prev, len
                    )));
                }
            }
            edge_lengths.insert(key, len);
        }
        Ok(Self {
            vertex_count,
            triangles,
            edge_lengths,
            face_curvature,
        })
    }

    pub fn edge_length(&self, u: usize, v: usize) -> Option<f64> {
        self.edge_lengths.get(&edge_key(u, v)).copied()
    }

    pub fn combinatorics(&self) -> Combinatorics {
        Combinatorics {
            vertex_count: self.vertex_count,
            triangles: self.triangles.clone(),
        }
    }

    /// Side lengths of a face in triangle order `(v0v1, v1v2, v2v0)`.
    fn face_sides(&self, face: usize) -> Option<[f64; 3]> {
        let [a, b, c] = self.triangles[face];
        Some([
            self.edge_length(a, b)?,
            self.edge_length(b, c)?,
            self.edge_length(c, a)?,
        ])
    }
}

/// Scaled sides of a face arranged so that [`corner_vertex`] maps face
/// corners to [`TriangleSides`] vertices: corner k is opposite the side not
/// touching it.
pub(crate) fn corner_sides(sides: [f64; 3], scale: f64) -> Result<TriangleSides> {
    // sides = (v0v1, v1v2, v2v0); vertex A = corner 0 is opposite v1v2.
    TriangleSides::new(sides[1] * scale, sides[2] * scale, sides[0] * scale)
}

/// Vertex selector for the `corner`-th face corner under [`corner_sides`].
pub(crate) fn corner_vertex(corner: usize) -> Vertex {
    match corner {
        0 => Vertex::A,
        1 => Vertex::B,
        _ => Vertex::C,
    }
}

/// A single problem found by [`validate`].
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum ValidationIssue {
    VertexOutOfRange { face: usize, vertex: usize },
    DegenerateFace { face: usize },
    MissingEdgeLength { u: usize, v: usize },
    NonPositiveEdgeLength { u: usize, v: usize, len: f64 },
    UnusedEdgeLength { u: usize, v: usize },
    TriangleInequalityViolated { face: usize, sides: [f64; 3] },
    EdgeFaceCountWrong { u: usize, v: usize, count: usize },
    NotOrientable { u: usize, v: usize },
    VertexLinkNotSingle { vertex: usize },
    IsolatedVertex { vertex: usize },
    NonNegativeFaceCurvature { value: f64 },
}

impl core::fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Self::VertexOutOfRange { face, vertex } => {
                write!(f, "face {face} references vertex {vertex} out of range")
            }
            Self::DegenerateFace { face } => write!(f, "face {face} repeats a vertex"),
            Self::MissingEdgeLength { u, v } => write!(f, "edge ({u}, {v}) has no length"),
            Self::NonPositiveEdgeLength { u, v, len } => {
                write!(f, "edge ({u}, {v}) has non-positive length {len}")
            }
            Self::UnusedEdgeLength { u, v } => {
                write!(f, "edge_lengths entry ({u}, {v}) is not an edge of any face")
            }
            Self::TriangleInequalityViolated { face, sides } => write!(
                f,
                "face {face} sides ({}, {}, {}) violate the triangle inequality",
                sides[0], sides[1], sides[2]
            ),
            Self::EdgeFaceCountWrong { u, v, count } => {
                write!(f, "edge ({u}, {v}) lies in {count} faces, expected 2")
            }
            Self::NotOrientable { u, v } => write!(
                f,
                "edge ({u}, {v}) is traversed twice in the same direction"
            ),
            Self::VertexLinkNotSingle { vertex } => {
                write!(f, "link of vertex {vertex} is not a single cycle")
            }
            Self::IsolatedVertex { vertex } => write!(f, "vertex {vertex} lies in no face"),
            Self::NonNegativeFaceCurvature { value } => {
                write!(f, "face curvature {value} is not negative")
            }
        }
    }
}

/// Outcome of [`validate`]; empty means valid.
#[derive(Debug, Clone, Default, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ValidationReport {
    pub issues: Vec<ValidationIssue>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn summary(&self) -> String {
        if self.is_clean() {
            String::from("clean")
        } else {
            let mut s = String::new();
            for (i, issue) in self.issues.iter().enumerate() {
                if i > 0 {
                    s.push_str("; ");
                }
                let _ = core::fmt::write(&mut s, format_args!("{issue}"));
            }
            s
        }
    }
}

/// Checks all triangulation invariants and reports every violation found:
/// index ranges, positive lengths on every edge, per-face triangle
/// inequalities, each edge in exactly two faces with opposite orientations,
/// and single-cycle vertex links.
pub fn validate(tri: &Triangulation) -> ValidationReport {
    let mut issues = Vec::new();

    if tri.face_curvature >= 0.0 {
        issues.push(ValidationIssue::NonNegativeFaceCurvature {
            value: tri.face_curvature,
        });
    }

    let mut index_ok = true;
    for (fi, t) in tri.triangles.iter().enumerate() {
        for &v in t {
            if v >= tri.vertex_count {
                issues.push(ValidationIssue::VertexOutOfRange { face: fi, vertex: v });
                index_ok = false;
            }
        }
        if t[0] == t[1] || t[1] == t[2] || t[2] == t[0] {
            issues.push(ValidationIssue::DegenerateFace { face: fi });
            index_ok = false;
        }
    }
    if !index_ok {
        return ValidationReport { issues };
    }

    // Edge lengths present, positive, and none left dangling.
    let mut used = alloc::collections::BTreeSet::new();
    for t in &tri.triangles {
        for (u, v) in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
            let key = edge_key(u, v);
            used.insert(key);
            match tri.edge_lengths.get(&key) {
                None => {
                    if !issues.contains(&ValidationIssue::MissingEdgeLength { u: key.0, v: key.1 })
                    {
                        issues.push(ValidationIssue::MissingEdgeLength { u: key.0, v: key.1 });
                    }
                }
                Some(&len) => {
                    if !(len > 0.0 && len.is_finite()) {
                        let issue = ValidationIssue::NonPositiveEdgeLength {
                            u: key.0,
                            v: key.1,
                            len,
                        };
                        if !issues.contains(&issue) {
                            issues.push(issue);
                        }
                    }
                }
            }
        }
    }
    for key in tri.edge_lengths.keys() {
        if !used.contains(key) {
            issues.push(ValidationIssue::UnusedEdgeLength { u: key.0, v: key.1 });
        }
    }

    // Per-face strict triangle inequalities.
    for fi in 0..tri.triangles.len() {
        if let Some(sides) = tri.face_sides(fi) {
            if TriangleSides::new(sides[0], sides[1], sides[2]).is_err() {
                issues.push(ValidationIssue::TriangleInequalityViolated { face: fi, sides });
            }
        }
    }

    // Closed orientable surface: every edge in exactly two faces, traversed
    // once in each direction.
    let mut directed = BTreeMap::new();
    let mut per_edge = BTreeMap::new();
    for t in &tri.triangles {
        for (u, v) in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
            *directed.entry((u, v)).or_insert(0usize) += 1;
            *per_edge.entry(edge_key(u, v)).or_insert(0usize) += 1;
        }
    }
    for (&(u, v), &count) in &per_edge {
        if count != 2 {
            issues.push(ValidationIssue::EdgeFaceCountWrong { u, v, count });
        }
    }
    for (&(u, v), &count) in &directed {
        if count > 1 {
            let key = edge_key(u, v);
            let issue = ValidationIssue::NotOrientable { u: key.0, v: key.1 };
            if !issues.contains(&issue) {
                issues.push(issue);
            }
        }
    }

    // Vertex links: walking face-to-face around each vertex must visit all
    // its incident faces in one cycle.
    if issues
        .iter()
        .all(|i| !matches!(i, ValidationIssue::EdgeFaceCountWrong { .. }))
    {
        let mut incident: Vec<Vec<usize>> = alloc::vec![Vec::new(); tri.vertex_count];
        for (fi, t) in tri.triangles.iter().enumerate() {
            for &v in t {
                incident[v].push(fi);
            }
        }
        for v in 0..tri.vertex_count {
            if incident[v].is_empty() {
                issues.push(ValidationIssue::IsolatedVertex { vertex: v });
                continue;
            }
            // Map "outgoing neighbor" -> face, using oriented corners at v.
            let mut next_of = BTreeMap::new();
            let mut ok = true;
            for &fi in &incident[v] {
                let t = tri.triangles[fi];
                let k = t.iter().position(|&x| x == v).unwrap();
                let a = t[(k + 1) % 3];
                if next_of.insert(a, fi).is_some() {
                    ok = false;
                }
            }
            if ok {
                // Follow the cycle: from face (v, a, b) continue with the
                // face whose outgoing corner is b.
                let start = *next_of.keys().next().unwrap();
                let mut cur = start;
                let mut visited = 0usize;
                loop {
                    let Some(&fi) = next_of.get(&cur) else {
                        ok = false;
                        break;
                    };
                    let t = tri.triangles[fi];
                    let k = t.iter().position(|&x| x == v).unwrap();
                    cur = t[(k + 2) % 3];
                    visited += 1;
                    if cur == start {
                        break;
                    }
                    if visited > incident[v].len() {
                        ok = false;
                        break;
                    }
                }
                if ok && visited != incident[v].len() {
                    ok = false;
                }
            }
            if !ok {
                issues.push(ValidationIssue::VertexLinkNotSingle { vertex: v });
            }
        }
    }

    ValidationReport { issues }
}

/// A validated closed polyhedral surface with cached cone angles.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyhedralSurface {
    tri: Triangulation,
    cone_angles: Vec<f64>,
}

impl PolyhedralSurface {
    /// Validates the triangulation and caches per-vertex cone angles.
    pub fn new(tri: Triangulation) -> Result<Self> {
        let report = validate(&tri);
        if !report.is_clean() {
            return Err(Error::InvalidSurface(report.summary()));
        }
        let mut cone_angles = alloc::vec![0.0; tri.vertex_count];
        let scale = math::sqrt(-tri.face_curvature);
        for (fi, t) in tri.triangles.iter().enumerate() {
            let sides = tri.face_sides(fi).expect("validated face has sides");
            let ts = corner_sides(sides, scale)?;
            for (k, &v) in t.iter().enumerate() {
                cone_angles[v] += trig::angle_from_sides(&ts, corner_vertex(k))?;
            }
        }
        Ok(Self { tri, cone_angles })
    }

    pub fn tri(&self) -> &Triangulation {
        &self.tri
    }

    pub fn vertex_count(&self) -> usize {
        self.tri.vertex_count
    }

    pub fn cone_angles(&self) -> &[f64] {
        &self.cone_angles
    }

    /// Total angle of the incident faces around a vertex.
    pub fn cone_angle(&self, vertex: usize) -> Result<f64> {
        self.cone_angles
            .get(vertex)
            .copied()
            .ok_or(Error::BadVertex {
                index: vertex,
                count: self.tri.vertex_count,
            })
    }

    /// Interior angle of a face at its `corner`-th vertex, exact for the
    /// face's curvature.
    pub fn face_angle(&self, face: usize, corner: usize) -> Result<f64> {
        if corner >= 3 {
            return Err(Error::ParamRange("face corner index must be 0..3"));
        }
        let sides = self
            .tri
            .face_sides(face)
            .ok_or_else(|| Error::InvalidSurface(String::from("face sides missing")))?;
        let ts = corner_sides(sides, math::sqrt(-self.tri.face_curvature))?;
        trig::angle_from_sides(&ts, corner_vertex(corner))
    }

    /// Area of a face in its own curvature.
    pub fn face_area(&self, face: usize) -> Result<f64> {
        let sides = self
            .tri
            .face_sides(face)
            .ok_or_else(|| Error::InvalidSurface(String::from("face sides missing")))?;
        let k = self.tri.face_curvature;
        let ts = corner_sides(sides, math::sqrt(-k))?;
        // Area scales by 1/(-K) relative to the curvature -1 model triangle.
        Ok(trig::angle_defect_area(&ts)? / (-k))
    }
}

/// Curvature classification of a polyhedral surface: curvature >= -1 in the
/// Alexandrov sense holds exactly when every cone angle is at most 2 pi.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum CurvatureClass {
    /// All cone angles <= 2 pi + tol.
    AlexandrovOk,
    /// Vertices whose cone angle exceeds 2 pi, with their angles.
    Offending(Vec<(usize, f64)>),
}

/// Classifies the surface by its cone angles at tolerance `tol`.
pub fn curvature_class(s: &PolyhedralSurface, tol: f64) -> CurvatureClass {
    let limit = 2.0 * core::f64::consts::PI + tol;
    let offending: Vec<(usize, f64)> = s
        .cone_angles
        .iter()
        .enumerate()
        .filter(|(_, &a)| a > limit)
        .map(|(v, &a)| (v, a))
        .collect();
    if offending.is_empty() {
        CurvatureClass::AlexandrovOk
    } else {
        CurvatureClass::Offending(offending)
    }
}

/// Distances between vertices of a metric space, indexed like the complex.
pub trait DistanceOracle {
    fn vertex_count(&self) -> usize;
    fn distance(&self, u: usize, v: usize) -> Result<f64>;
}

/// Oracle backed by an explicit pair list.
#[derive(Debug, Clone)]
pub struct PairOracle {
    n: usize,
    pairs: BTreeMap<(usize, usize), f64>,
}

impl PairOracle {
    pub fn from_pairs(n: usize, entries: &[(usize, usize, f64)]) -> Result<Self> {
        let mut pairs = BTreeMap::new();
        for &(u, v, d) in entries {
            if u >= n || v >= n {
                return Err(Error::BadVertex {
                    index: u.max(v),
                    count: n,
                });
            }
            if !(d.is_finite() && d >= 0.0) || (u == v && d != 0.0) {
                return Err(Error::BadOracle { u, v, value: d });
            }
            let key = edge_key(u, v);
            if let Some(&prev) = pairs.get(&key) {
                if prev != d {
                    return Err(Error::BadOracle { u, v, value: d });
                }
            }
            pairs.insert(key, d);
        }
        Ok(Self { n, pairs })
    }

    pub fn known_pairs(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.pairs.iter().map(|(&(u, v), &d)| (u, v, d))
    }
}

impl DistanceOracle for PairOracle {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn distance(&self, u: usize, v: usize) -> Result<f64> {
        if u == v {
            return Ok(0.0);
        }
        self.pairs
            .get(&edge_key(u, v))
            .copied()
            .ok_or(Error::BadOracle {
                u,
                v,
                value: f64::NAN,
            })
    }
}

/// Spot-checks oracle symmetry and triangle inequalities on sampled triples.
pub fn check_oracle_triples(
    oracle: &dyn DistanceOracle,
    triples: &[(usize, usize, usize)],
    slack: f64,
) -> Result<()> {
    for &(u, v, w) in triples {
        let duv = oracle.distance(u, v)?;
        let dvu = oracle.distance(v, u)?;
        if math::abs(duv - dvu) > slack {
            return Err(Error::BadOracle {
                u,
                v,
                value: duv - dvu,
            });
        }
        let dvw = oracle.distance(v, w)?;
        let duw = oracle.distance(u, w)?;
        if duw > duv + dvw + slack {
            return Err(Error::BadOracle {
                u,
                v: w,
                value: duw - (duv + dvw),
            });
        }
    }
    Ok(())
}

/// Builds the comparison polyhedron of a metric: every edge of the complex
/// gets the oracle distance of its endpoints as length, every face becomes
/// the hyperbolic triangle with those side lengths.
///
/// The result passes validation; its curvature class is for the caller to
/// report, since only oracles sampled finely from genuine curvature >= -1
/// metrics are guaranteed to stay below the 2 pi cone-angle limit.
pub fn comparison_polyhedron(
    oracle: &dyn DistanceOracle,
    comb: &Combinatorics,
) -> Result<PolyhedralSurface> {
    let mut edge_lengths = BTreeMap::new();
    for (u, v) in comb.edges() {
        let d = oracle.distance(u, v)?;
        if !(d > 0.0 && d.is_finite()) {
            return Err(Error::BadOracle { u, v, value: d });
        }
        edge_lengths.insert((u, v), d);
    }
    for (fi, t) in comb.triangles.iter().enumerate() {
        let a = edge_lengths[&edge_key(t[0], t[1])];
        let b = edge_lengths[&edge_key(t[1], t[2])];
        let c = edge_lengths[&edge_key(t[2], t[0])];
        if TriangleSides::new(a, b, c).is_err() {
            return Err(Error::UnbuildableFace { face: fi, a, b, c });
        }
    }
    PolyhedralSurface::new(Triangulation {
        vertex_count: comb.vertex_count,
        triangles: comb.triangles.clone(),
        edge_lengths,
        face_curvature: -1.0,
    })
}

/// Upper bound on the intrinsic distance between two vertices, through the
/// subdivision graph with `n` extra nodes per edge. Non-increasing along
/// nested refinements and exact in the limit.
pub fn intrinsic_distance(
    s: &PolyhedralSurface,
    u: usize,
    v: usize,
    refinement: usize,
) -> Result<f64> {
    let g = SubdivisionGraph::build(s, refinement)?;
    g.vertex_distance(u, v)
}

/// Largest |d_a - d_b| over the sampled pairs.
pub fn metric_deviation<F, G>(a: F, b: G, pairs: &[(usize, usize)]) -> f64
where
    F: Fn(usize, usize) -> f64,
    G: Fn(usize, usize) -> f64,
{
    let mut worst = 0.0f64;
    for &(u, v) in pairs {
        worst = worst.max(math::abs(a(u, v) - b(u, v)));
    }
    worst
}

/// Sectional curvature after scaling the metric by `lambda`: `k / lambda`.
pub fn scale_curvature(k: f64, lambda: f64) -> Result<f64> {
    if !(lambda > 0.0) {
        return Err(Error::ParamRange("metric scale must be positive"));
    }
    Ok(k / lambda)
}

/// Scales the metric by `lambda > 1`: all edge lengths grow by sqrt(lambda)
/// and the face curvature drops to `k / lambda`. Angle and distance
/// computations on the result rescale sides back to curvature -1, so the
/// scaling is exact.
pub fn scale_distances(s: &PolyhedralSurface, lambda: f64) -> Result<PolyhedralSurface> {
    if !(lambda > 1.0) {
        return Err(Error::ParamRange("distance scaling requires lambda > 1"));
    }
    let root = math::sqrt(lambda);
    let mut tri = s.tri.clone();
    for len in tri.edge_lengths.values_mut() {
        *len *= root;
    }
    tri.face_curvature = s.tri.face_curvature / lambda;
    PolyhedralSurface::new(tri)
}

/// Upper-bound estimate of the diameter: the largest pairwise vertex
/// distance at the given refinement.
pub fn diameter_estimate(s: &PolyhedralSurface, refinement: usize) -> Result<f64> {
    let g = SubdivisionGraph::build(s, refinement)?;
    let mut worst = 0.0f64;
    for u in 0..s.vertex_count() {
        let dists = g.distances_from_vertex(u)?;
        for v in (u + 1)..s.vertex_count() {
            worst = worst.max(dists[v]);
        }
    }
    Ok(worst)
}

/// Gauss-Bonnet residual
/// `|sum_v (2 pi - cone_v) + sum_f K_f area_f - 2 pi chi|`.
pub fn gauss_bonnet_residual(s: &PolyhedralSurface) -> Result<f64> {
    let tri = s.tri();
    let chi = tri.vertex_count as f64 - tri.edge_lengths.len() as f64 + tri.triangles.len() as f64;
    let mut total = -2.0 * core::f64::consts::PI * chi;
    for &angle in &s.cone_angles {
        total += 2.0 * core::f64::consts::PI - angle;
    }
    for face in 0..tri.triangles.len() {
        total += tri.face_curvature * s.face_area(face)?;
    }
    Ok(math::abs(total))
}

/// Vertex-distance oracle of an existing surface, for idempotence checks.
pub struct SurfaceVertexOracle {
    distances: Vec<Vec<f64>>,
}

impl SurfaceVertexOracle {
    /// Precomputes all pairwise vertex distances at the given refinement.
    pub fn new(s: &PolyhedralSurface, refinement: usize) -> Result<Self> {
        let g = SubdivisionGraph::build(s, refinement)?;
        let mut distances = Vec::with_capacity(s.vertex_count());
        for u in 0..s.vertex_count() {
            distances.push(g.distances_from_vertex(u)?);
        }
        Ok(Self { distances })
    }
}

impl DistanceOracle for SurfaceVertexOracle {
    fn vertex_count(&self) -> usize {
        self.distances.len()
    }

    fn distance(&self, u: usize, v: usize) -> Result<f64> {
        self.distances
            .get(u)
            .and_then(|row| row.get(v))
            .copied()
            .ok_or(Error::BadVertex {
                index: u.max(v),
                count: self.distances.len(),
            })
    }
}

#[cfg(test)]
mod tests;
