//! Subdivision-graph distances on a polyhedral surface.
//!
//! Nodes are the surface vertices plus `n` equally spaced points per edge.
//! Arcs are geodesic chords inside one face, plus chords across two faces
//! unfolded along their shared edge whenever the straight chord actually
//! crosses that edge. Every arc is the length of a genuine path on the
//! surface, so graph distances bound the intrinsic metric from above and
//! tighten as `n` grows.

use super::{corner_sides, corner_vertex, PolyhedralSurface};
use crate::error::{Error, Result};
use crate::hyperboloid::{dist, geodesic_lerp, geodesic_point, HPoint, Vec4};
use crate::math;
use crate::plane::{slice_cross, Geodesic};
use crate::trig;
use alloc::collections::{BTreeMap, BinaryHeap};
use alloc::vec::Vec;
use core::cmp::Ordering;

/// Planar layout of one face in the curvature -1 chart (sides pre-scaled by
/// sqrt(-K)), with the positions of every boundary node.
struct FaceLayout {
    /// Corner positions in face order.
    corners: [HPoint; 3],
    /// Node ids on the face boundary with their positions.
    nodes: Vec<(u32, HPoint)>,
    /// Sides in face order (scaled), for unfolding.
    sides: [f64; 3],
}

pub struct SubdivisionGraph {
    node_count: usize,
    vertex_count: usize,
    adjacency: Vec<Vec<(u32, f64)>>,
}

#[derive(PartialEq)]
struct QueueEntry {
    dist: f64,
    node: u32,
}

impl Eq for QueueEntry {}

impl PartialOrd for QueueEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QueueEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        // Reversed for min-heap behavior.
        other
            .dist
            .partial_cmp(&self.dist)
            .unwrap_or(Ordering::Equal)
            .then_with(|| other.node.cmp(&self.node))
    }
}

impl SubdivisionGraph {
    /// Builds the graph for a validated surface at the given refinement.
    pub fn build(surface: &PolyhedralSurface, refinement: usize) -> Result<Self> {
        let tri = surface.tri();
        let scale = math::sqrt(-tri.face_curvature);
        let n = refinement;

        let edges: Vec<(usize, usize)> = tri.edge_lengths.keys().copied().collect();
        let edge_index: BTreeMap<(usize, usize), usize> =
            edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();

        let vertex_count = tri.vertex_count;
        let node_count = vertex_count + edges.len() * n;
        let mut adjacency: Vec<Vec<(u32, f64)>> = alloc::vec![Vec::new(); node_count];

        // Node id of the k-th subdivision point (1-based) on edge `e`,
        // measured from the smaller vertex.
        let sub_node = |e: usize, k: usize| -> u32 { (vertex_count + e * n + (k - 1)) as u32 };

        // Lay out every face once and record boundary node positions.
        let mut layouts: Vec<FaceLayout> = Vec::with_capacity(tri.triangles.len());
        for t in &tri.triangles {
            let s01 = tri.edge_length(t[0], t[1]).unwrap() * scale;
            let s12 = tri.edge_length(t[1], t[2]).unwrap() * scale;
            let s20 = tri.edge_length(t[2], t[0]).unwrap() * scale;
            let sides = corner_sides([s01, s12, s20], 1.0)?;
            // Corner 0 at the base point, corner 1 along E1, corner 2 above.
            let c0 = HPoint::origin();
            let c1 = geodesic_point(&c0, Vec4::E1, s01);
            let angle0 = trig::angle_from_sides(&sides, corner_vertex(0))?;
            let dir2 = Vec4::E1 * math::cos(angle0) + Vec4::E2 * math::sin(angle0);
            let c2 = geodesic_point(&c0, dir2, s20);
            let corners = [c0, c1, c2];

            let mut nodes: Vec<(u32, HPoint)> = Vec::with_capacity(3 + 3 * n);
            for (ci, &v) in t.iter().enumerate() {
                nodes.push((v as u32, corners[ci]));
            }
            for (a, b) in [(0usize, 1usize), (1, 2), (2, 0)] {
                let (u, v) = (t[a], t[b]);
                let key = super::edge_key(u, v);
                let e = edge_index[&key];
                // Subdivision parameters run from the smaller vertex.
                let (lo_corner, hi_corner) = if key.0 == u { (a, b) } else { (b, a) };
                for k in 1..=n {
                    let frac = k as f64 / (n + 1) as f64;
                    let pos =
                        geodesic_lerp(&corners[lo_corner], &corners[hi_corner], frac);
                    nodes.push((sub_node(e, k), pos));
                }
            }
            layouts.push(FaceLayout {
                corners,
                nodes,
                sides: [s01, s12, s20],
            });
        }

        // Within-face chords between all boundary node pairs.
        for layout in &layouts {
            for i in 0..layout.nodes.len() {
                for j in (i + 1)..layout.nodes.len() {
                    let (a, pa) = layout.nodes[i];
                    let (b, pb) = layout.nodes[j];
                    if a == b {
                        continue;
                    }
                    let w = dist(&pa, &pb) / scale;
                    adjacency[a as usize].push((b, w));
                    adjacency[b as usize].push((a, w));
                }
            }
        }

        // Two-face windows: unfold the neighbor face across each shared edge
        // and connect node pairs whose straight chord crosses it.
        let mut faces_of_edge: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
        for (fi, t) in tri.triangles.iter().enumerate() {
            for (a, b) in [(0usize, 1usize), (1, 2), (2, 0)] {
                let e = edge_index[&super::edge_key(t[a], t[b])];
                faces_of_edge.entry(e).or_default().push((fi, a));
            }
        }

        for (&e, incident) in &faces_of_edge {
            if incident.len() != 2 {
                continue;
            }
            let (fi, ca) = incident[0];
            let (gi, cb) = incident[1];
            let key = edges[e];
            Self::add_window_arcs(
                surface,
                &layouts,
                fi,
                ca,
                gi,
                cb,
                key,
                n,
                scale,
                &edge_index,
                &sub_node,
                &mut adjacency,
            )?;
        }

        Ok(Self {
            node_count,
            vertex_count,
            adjacency,
        })
    }

    /// Unfolds face `gi` across the shared edge into face `fi`'s chart and
    /// adds crossing chords.
    #[allow(clippy::too_many_arguments)]
    fn add_window_arcs(
        surface: &PolyhedralSurface,
        layouts: &[FaceLayout],
        fi: usize,
        corner_a: usize,
        gi: usize,
        corner_b: usize,
        edge: (usize, usize),
        n: usize,
        scale: f64,
        edge_index: &BTreeMap<(usize, usize), usize>,
        sub_node: &impl Fn(usize, usize) -> u32,
        adjacency: &mut [Vec<(u32, f64)>],
    ) -> Result<()> {
        let tri = surface.tri();
        let f_face = tri.triangles[fi];
        let g_face = tri.triangles[gi];
        let f_layout = &layouts[fi];

        // Shared edge endpoints in f's chart, in f's traversal order.
        let fa = corner_a;
        let fb = (corner_a + 1) % 3;
        let pa = f_layout.corners[fa];
        let pb = f_layout.corners[fb];
        let shared = Geodesic::through(&pa, &pb)
            .map_err(|_| Error::DegenerateTriangle("zero-length shared edge"))?;
        let apex_f = f_layout.corners[(corner_a + 2) % 3];
        let side_f = shared.sinh_signed_dist(&apex_f);

        // g traverses the same undirected edge in the opposite direction.
        let ga = corner_b;
        let gb = (corner_b + 1) % 3;
        debug_assert_eq!(
            super::edge_key(g_face[ga], g_face[gb]),
            super::edge_key(f_face[fa], f_face[fb])
        );
        // Position g's corners in f's chart: the shared corners coincide,
        // the apex goes to the opposite side of the shared edge.
        let apex_corner = (corner_b + 2) % 3;
        let s_ga_apex = tri
            .edge_length(g_face[ga], g_face[apex_corner])
            .unwrap()
            * scale;
        // Angle of g at its corner `ga` between the shared edge and the apex.
        let g_sides = {
            let s01 = tri.edge_length(g_face[0], g_face[1]).unwrap() * scale;
            let s12 = tri.edge_length(g_face[1], g_face[2]).unwrap() * scale;
            let s20 = tri.edge_length(g_face[2], g_face[0]).unwrap() * scale;
            corner_sides([s01, s12, s20], 1.0)?
        };
        let angle_ga = trig::angle_from_sides(&g_sides, corner_vertex(ga))?;

        // g's corner ga maps to pb in f's chart (opposite traversal), and gb
        // maps to pa.
        let base = pb;
        let toward = pa;
        let dir = crate::hyperboloid::direction(&base, &toward)
            .map_err(|_| Error::DegenerateTriangle("zero-length shared edge"))?;
        let normal = slice_cross(base.vec(), dir);
        // Try the rotation that puts the apex opposite f's apex.
        let mut apex_g = None;
        for sign in [1.0f64, -1.0] {
            let d = dir * math::cos(angle_ga) + normal * (sign * math::sin(angle_ga));
            let candidate = geodesic_point(&base, d, s_ga_apex);
            if shared.sinh_signed_dist(&candidate) * side_f < 0.0 {
                apex_g = Some(candidate);
                break;
            }
        }
        let Some(apex_g) = apex_g else {
            // Degenerately thin neighbor; skip the window.
            return Ok(());
        };

        // Positions of g's corners in f's chart, in g's corner order.
        let mut g_corners = [HPoint::origin(); 3];
        g_corners[ga] = base;
        g_corners[gb] = toward;
        g_corners[apex_corner] = apex_g;

        // Boundary nodes of g in the unfolded chart, skipping the shared edge.
        let mut g_nodes: Vec<(u32, HPoint)> = Vec::new();
        g_nodes.push((g_face[apex_corner] as u32, apex_g));
        for (a, b) in [(0usize, 1usize), (1, 2), (2, 0)] {
            let key = super::edge_key(g_face[a], g_face[b]);
            if key == edge {
                continue;
            }
            let e = edge_index[&key];
            let (lo_corner, hi_corner) = if key.0 == g_face[a] { (a, b) } else { (b, a) };
            for k in 1..=n {
                let frac = k as f64 / (n + 1) as f64;
                let pos = geodesic_lerp(&g_corners[lo_corner], &g_corners[hi_corner], frac);
                g_nodes.push((sub_node(e, k), pos));
            }
        }

        // f-side nodes strictly off the shared edge.
        let len_shared = dist(&pa, &pb);
        for &(a_id, a_pos) in &f_layout.nodes {
            let sa = shared.sinh_signed_dist(&a_pos);
            if math::abs(sa) < 1e-14 {
                continue;
            }
            for &(b_id, b_pos) in &g_nodes {
                let sb = shared.sinh_signed_dist(&b_pos);
                if sa * sb >= 0.0 || a_id == b_id {
                    continue;
                }
                // The chord must cross the open shared-edge segment.
                let chord = match Geodesic::through(&a_pos, &b_pos) {
                    Ok(g) => g,
                    Err(_) => continue,
                };
                let crossing = match shared.intersect(&chord) {
                    Ok(x) => x,
                    Err(_) => continue,
                };
                if dist(&pa, &crossing) >= len_shared || dist(&pb, &crossing) >= len_shared {
                    continue;
                }
                let w = dist(&a_pos, &b_pos) / scale;
                adjacency[a_id as usize].push((b_id, w));
                adjacency[b_id as usize].push((a_id, w));
            }
        }
        Ok(())
    }

    #[allow(dead_code)]
    pub fn node_count(&self) -> usize {
        self.node_count
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count {
            return Err(Error::BadVertex {
                index: v,
                count: self.vertex_count,
            });
        }
        Ok(())
    }

    /// Shortest graph distance between two surface vertices.
    pub fn vertex_distance(&self, u: usize, v: usize) -> Result<f64> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Ok(0.0);
        }
        Ok(self.dijkstra(u as u32, Some(v as u32))[v])
    }

    /// Distances from a vertex to every surface vertex.
    pub fn distances_from_vertex(&self, u: usize) -> Result<Vec<f64>> {
        self.check_vertex(u)?;
        let all = self.dijkstra(u as u32, None);
        Ok(all[..self.vertex_count].to_vec())
    }

    fn dijkstra(&self, source: u32, target: Option<u32>) -> Vec<f64> {
        let mut distances = alloc::vec![f64::INFINITY; self.node_count];
        let mut heap = BinaryHeap::new();
        distances[source as usize] = 0.0;
        heap.push(QueueEntry {
            dist: 0.0,
            node: source,
        });
        while let Some(QueueEntry { dist: d, node }) = heap.pop() {
            if d > distances[node as usize] {
                continue;
            }
            if target == Some(node) {
                break;
            }
            for &(next, w) in &self.adjacency[node as usize] {
                let nd = d + w;
                if nd < distances[next as usize] {
                    distances[next as usize] = nd;
                    heap.push(QueueEntry {
                        dist: nd,
                        node: next,
                    });
                }
            }
        }
        distances
    }
}
