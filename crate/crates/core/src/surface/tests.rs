use super::*;
use crate::hyperboloid::{dist, geodesic_point, HPoint, Vec4};
use crate::plane::slice_direction;
use proptest::prelude::*;

const PI: f64 = core::f64::consts::PI;

fn quarter_pi_side() -> f64 {
    equilateral_side_for_angle(PI / 4.0).unwrap()
}

#[test]
fn octahedron_validates_clean() {
    let s = octahedron(1.0).unwrap();
    assert!(validate(s.tri()).is_clean());
    assert_eq!(s.vertex_count(), 6);
    assert_eq!(s.tri().triangles.len(), 8);
    assert_eq!(s.tri().edge_lengths.len(), 12);
}

#[test]
fn validate_reports_triangle_inequality() {
    let s = octahedron(1.0).unwrap();
    let mut tri = s.tri().clone();
    // One edge stretched beyond any triangle containing it.
    let key = *tri.edge_lengths.keys().next().unwrap();
    tri.edge_lengths.insert(key, 1.0 + 1.0 + 1.0);
    let report = validate(&tri);
    assert!(report
        .issues
        .iter()
        .any(|i| matches!(i, ValidationIssue::TriangleInequalityViolated { .. })));
}

#[test]
fn validate_reports_open_edge() {
    // Remove one face: its three edges drop to a single incident face.
    let s = octahedron(1.0).unwrap();
    let mut tri = s.tri().clone();
    tri.triangles.pop();
    let report = validate(&tri);
    assert!(report
        .issues
        .iter()
        .any(|i| matches!(i, ValidationIssue::EdgeFaceCountWrong { count: 1, .. })));
}

#[test]
fn from_parts_rejects_mismatched_duplicate_edges() {
    let err = Triangulation::from_parts(
        3,
        alloc::vec![[0, 1, 2], [0, 2, 1]],
        &[(0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0), (1, 0, 1.5)],
        -1.0,
    );
    assert!(err.is_err());
}

#[test]
fn cone_angles_of_bipyramid_apexes() {
    let side = quarter_pi_side();
    // Eight pi/4 wedges close up exactly.
    let s8 = bipyramid(8, side).unwrap();
    assert!((s8.cone_angle(0).unwrap() - 2.0 * PI).abs() < 1e-9);
    assert!((s8.cone_angle(1).unwrap() - 2.0 * PI).abs() < 1e-9);
    // Six wedges leave a cone point.
    let s6 = bipyramid(6, side).unwrap();
    assert!((s6.cone_angle(0).unwrap() - 1.5 * PI).abs() < 1e-9);
    // Ten exceed the Alexandrov limit.
    let s10 = bipyramid(10, side).unwrap();
    assert!((s10.cone_angle(0).unwrap() - 2.5 * PI).abs() < 1e-9);

    assert!(matches!(
        curvature_class(&s8, 1e-9),
        CurvatureClass::AlexandrovOk
    ));
    assert!(matches!(
        curvature_class(&s6, 1e-9),
        CurvatureClass::AlexandrovOk
    ));
    match curvature_class(&s10, 1e-9) {
        CurvatureClass::Offending(list) => {
            assert!(list.iter().any(|&(v, a)| v == 0 && (a - 2.5 * PI).abs() < 1e-9));
            assert!(list.iter().any(|&(v, _)| v == 1));
        }
        CurvatureClass::AlexandrovOk => panic!("10-wedge apex must be flagged"),
    }
}

#[test]
fn cone_angle_rejects_bad_vertex() {
    let s = octahedron(1.0).unwrap();
    assert!(s.cone_angle(17).is_err());
}

#[test]
fn comparison_idempotence_on_octahedron() {
    let s = octahedron(1.0).unwrap();
    let oracle = SurfaceVertexOracle::new(&s, 4).unwrap();
    let rebuilt = comparison_polyhedron(&oracle, &s.tri().combinatorics()).unwrap();
    for (key, &len) in &s.tri().edge_lengths {
        let got = rebuilt.tri().edge_lengths[key];
        assert!(
            (got - len).abs() < 1e-12,
            "edge {key:?}: {got} vs {len}"
        );
    }
}

#[test]
fn comparison_of_unit_three_point_metric() {
    // Three points pairwise at distance one on a pair of glued triangles.
    let oracle = PairOracle::from_pairs(3, &[(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
    let comb = Combinatorics {
        vertex_count: 3,
        triangles: alloc::vec![[0, 1, 2], [0, 2, 1]],
    };
    let s = comparison_polyhedron(&oracle, &comb).unwrap();
    for &len in s.tri().edge_lengths.values() {
        assert_eq!(len, 1.0);
    }
}

#[test]
fn comparison_rejects_unbuildable_face() {
    let oracle = PairOracle::from_pairs(3, &[(0, 1, 3.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
    let comb = Combinatorics {
        vertex_count: 3,
        triangles: alloc::vec![[0, 1, 2], [0, 2, 1]],
    };
    assert!(matches!(
        comparison_polyhedron(&oracle, &comb),
        Err(Error::UnbuildableFace { .. })
    ));
}

#[test]
fn oracle_triple_check_catches_violations() {
    let good = PairOracle::from_pairs(3, &[(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
    assert!(check_oracle_triples(&good, &[(0, 1, 2)], 1e-12).is_ok());
    let bad = PairOracle::from_pairs(3, &[(0, 1, 1.0), (1, 2, 1.0), (0, 2, 5.0)]).unwrap();
    assert!(check_oracle_triples(&bad, &[(0, 2, 1)], 1e-12).is_err());
}

#[test]
fn intrinsic_distance_basics() {
    let s = octahedron(1.0).unwrap();
    assert_eq!(intrinsic_distance(&s, 2, 2, 4).unwrap(), 0.0);
    // Adjacent vertices: the edge is the shortest path at every refinement.
    for n in [0usize, 3, 8] {
        let d = intrinsic_distance(&s, 2, 3, n).unwrap();
        assert!((d - 1.0).abs() < 1e-12, "n = {n}: {d}");
    }
    assert!(intrinsic_distance(&s, 0, 99, 2).is_err());
}

#[test]
fn intrinsic_distance_non_increasing_on_nested_refinements() {
    let s = octahedron(1.0).unwrap();
    // Nested node sets: interval counts 1, 2, 4, 8, 16.
    let mut prev = f64::INFINITY;
    for &n in &[0usize, 1, 3, 7, 15] {
        let d = intrinsic_distance(&s, 0, 1, n).unwrap();
        assert!(d <= prev + 1e-12, "n = {n}: {d} > {prev}");
        prev = d;
    }
}

#[test]
fn intrinsic_distance_dominates_chordal_embedding() {
    // The regular octahedron embeds with equator radius r, apex height r,
    // cosh r = sqrt(cosh side).
    let side = 1.0f64;
    let s = octahedron(side).unwrap();
    let r = side.cosh().sqrt().acosh();
    let o = HPoint::origin();
    let mut pos = alloc::vec![HPoint::origin(); 6];
    pos[0] = geodesic_point(&o, Vec4::E3, r);
    pos[1] = geodesic_point(&o, Vec4::E3, -r);
    for k in 0..4 {
        let phi = PI / 2.0 * k as f64;
        let dir = Vec4::new(0.0, phi.cos(), phi.sin(), 0.0);
        pos[2 + k] = geodesic_point(&o, dir, r);
    }
    // Sanity: all edges have the declared side length.
    for (&(u, v), &len) in &s.tri().edge_lengths {
        assert!((dist(&pos[u], &pos[v]) - len).abs() < 1e-9);
    }
    for u in 0..6 {
        for v in (u + 1)..6 {
            let intrinsic = intrinsic_distance(&s, u, v, 8).unwrap();
            assert!(intrinsic >= dist(&pos[u], &pos[v]) - 1e-9);
        }
    }
}

#[test]
fn metric_deviation_basics() {
    let pairs = [(0usize, 1usize), (0, 2), (1, 2)];
    let d = |u: usize, v: usize| (u + v) as f64;
    assert_eq!(metric_deviation(d, d, &pairs), 0.0);
    let d_scaled = |u: usize, v: usize| 1.1 * (u + v) as f64;
    let dev = metric_deviation(d, d_scaled, &pairs);
    assert!((dev - 0.3).abs() < 1e-12);
}

proptest! {
    #[test]
    fn metric_deviation_is_a_pseudometric(
        a in prop::collection::vec(0.0f64..10.0, 6),
        b in prop::collection::vec(0.0f64..10.0, 6),
        c in prop::collection::vec(0.0f64..10.0, 6),
    ) {
        let pairs: alloc::vec::Vec<(usize, usize)> = (0..6).map(|i| (i, i)).collect();
        let fa = |u: usize, _: usize| a[u];
        let fb = |u: usize, _: usize| b[u];
        let fc = |u: usize, _: usize| c[u];
        let dab = metric_deviation(fa, fb, &pairs);
        let dba = metric_deviation(fb, fa, &pairs);
        prop_assert!((dab - dba).abs() < 1e-12);
        let dac = metric_deviation(fa, fc, &pairs);
        let dcb = metric_deviation(fc, fb, &pairs);
        prop_assert!(dab <= dac + dcb + 1e-12);
    }
}

#[test]
fn scale_curvature_values() {
    assert_eq!(scale_curvature(-1.0, 1.0).unwrap(), -1.0);
    assert_eq!(scale_curvature(-1.0, 2.0).unwrap(), -0.5);
    assert_eq!(scale_curvature(0.0, 3.0).unwrap(), 0.0);
    assert!(scale_curvature(-1.0, 0.0).is_err());
}

#[test]
fn scale_distances_doubles_metric_at_lambda_four() {
    let s = octahedron(1.0).unwrap();
    let scaled = scale_distances(&s, 4.0).unwrap();
    assert!((scaled.tri().face_curvature + 0.25).abs() < 1e-15);
    for u in 0..6 {
        for v in (u + 1)..6 {
            let d0 = intrinsic_distance(&s, u, v, 8).unwrap();
            let d1 = intrinsic_distance(&scaled, u, v, 8).unwrap();
            assert!((d1 - 2.0 * d0).abs() < 1e-6, "{u}-{v}: {d1} vs {d0}");
        }
    }
    assert!(scale_distances(&s, 1.0).is_err());
    assert!(scale_distances(&s, 0.5).is_err());
}

#[test]
fn scale_distances_preserves_cone_angles() {
    // Angles are scale-invariant: the 2 pi vertex of the 8-wedge bipyramid
    // stays exactly 2 pi, cone vertices keep their angles too.
    let side = quarter_pi_side();
    let s = bipyramid(8, side).unwrap();
    let scaled = scale_distances(&s, 3.7).unwrap();
    for v in 0..s.vertex_count() {
        assert!(
            (s.cone_angle(v).unwrap() - scaled.cone_angle(v).unwrap()).abs() < 1e-9,
            "vertex {v}"
        );
    }
    assert!((scaled.cone_angle(0).unwrap() - 2.0 * PI).abs() < 1e-9);
}

#[test]
fn scale_distances_near_one_is_near_identity() {
    let s = octahedron(1.0).unwrap();
    let scaled = scale_distances(&s, 1.0 + 1e-9).unwrap();
    let pairs: alloc::vec::Vec<(usize, usize)> =
        (0..6).flat_map(|u| ((u + 1)..6).map(move |v| (u, v))).collect();
    let g0 = SubdivisionGraph::build(&s, 4).unwrap();
    let g1 = SubdivisionGraph::build(&scaled, 4).unwrap();
    let dev = metric_deviation(
        |u, v| g0.vertex_distance(u, v).unwrap(),
        |u, v| g1.vertex_distance(u, v).unwrap(),
        &pairs,
    );
    assert!(dev < 1e-8);
}

#[test]
fn diameter_of_pillow_is_the_side() {
    let s = triangular_pillow(1.0, 1.0, 1.0).unwrap();
    let d = diameter_estimate(&s, 6).unwrap();
    assert!((d - 1.0).abs() < 1e-12);
}

#[test]
fn diameter_doubles_under_scaling() {
    let s = octahedron(1.0).unwrap();
    let d0 = diameter_estimate(&s, 8).unwrap();
    let scaled = scale_distances(&s, 4.0).unwrap();
    let d1 = diameter_estimate(&scaled, 8).unwrap();
    assert!((d1 - 2.0 * d0).abs() < 1e-6);
}

#[test]
fn gauss_bonnet_on_closed_fixtures() {
    let fixtures = [
        octahedron(1.0).unwrap(),
        bipyramid(8, quarter_pi_side()).unwrap(),
        bipyramid(6, 0.8).unwrap(),
        triangular_pillow(0.9, 1.1, 1.3).unwrap(),
        scale_distances(&octahedron(1.0).unwrap(), 4.0).unwrap(),
    ];
    for (i, s) in fixtures.iter().enumerate() {
        let r = gauss_bonnet_residual(s).unwrap();
        assert!(r < 1e-6, "fixture {i}: residual {r}");
    }
}

#[test]
fn h2grid_cone_angles_tighten_under_refinement() {
    let mut prev = f64::INFINITY;
    for m in [2usize, 4, 8] {
        let grid = H2Grid::new(H2GridParams {
            m,
            radius: 1.0,
            lambda: 4.0,
        })
        .unwrap();
        let s = comparison_polyhedron(&grid, grid.combinatorics()).unwrap();
        assert!(matches!(
            curvature_class(&s, 1e-9),
            CurvatureClass::AlexandrovOk
        ));
        let worst = grid
            .interior_vertices()
            .into_iter()
            .map(|v| (s.cone_angle(v).unwrap() - 2.0 * PI).abs())
            .fold(0.0f64, f64::max);
        assert!(worst < 0.05, "m = {m}: worst deviation {worst}");
        assert!(worst < prev, "m = {m}: {worst} !< {prev}");
        prev = worst;
    }
}

#[test]
fn h2grid_deviation_decreases_under_refinement() {
    let mut prev = f64::INFINITY;
    for m in [2usize, 4, 8] {
        let grid = H2Grid::new(H2GridParams {
            m,
            radius: 1.0,
            lambda: 4.0,
        })
        .unwrap();
        let s = comparison_polyhedron(&grid, grid.combinatorics()).unwrap();
        let g = SubdivisionGraph::build(&s, 6).unwrap();
        let pairs = grid.declared_pairs();
        let eps = metric_deviation(
            |u, v| g.vertex_distance(u, v).unwrap(),
            |u, v| grid.distance(u, v).unwrap(),
            &pairs,
        );
        assert!(eps < prev, "m = {m}: {eps} !< {prev}");
        prev = eps;
    }
}

#[test]
fn h2grid_lambda_one_is_exactly_flat() {
    // Without scaling the net triangulates the square exactly: interior
    // cone angles are 2 pi to rounding.
    let grid = H2Grid::new(H2GridParams {
        m: 3,
        radius: 1.0,
        lambda: 1.0,
    })
    .unwrap();
    let s = comparison_polyhedron(&grid, grid.combinatorics()).unwrap();
    for v in grid.interior_vertices() {
        assert!((s.cone_angle(v).unwrap() - 2.0 * PI).abs() < 1e-10);
    }
}

#[test]
fn subdivision_graph_window_shortcut_beats_vertex_paths() {
    // Across an edge of the octahedron, midpoint-to-midpoint routes must be
    // shorter than any vertex-only route between the same endpoints.
    let s = octahedron(1.0).unwrap();
    let apexes = intrinsic_distance(&s, 0, 1, 0).unwrap();
    let refined = intrinsic_distance(&s, 0, 1, 12).unwrap();
    assert!(refined < apexes - 1e-3);
}

#[test]
fn face_angles_sum_to_cone_angles() {
    let s = octahedron(1.3).unwrap();
    let mut sums = alloc::vec![0.0; s.vertex_count()];
    for (fi, t) in s.tri().triangles.iter().enumerate() {
        for (k, &v) in t.iter().enumerate() {
            sums[v] += s.face_angle(fi, k).unwrap();
        }
    }
    for v in 0..s.vertex_count() {
        assert!((sums[v] - s.cone_angle(v).unwrap()).abs() < 1e-12);
    }
}
