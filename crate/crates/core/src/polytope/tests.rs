use super::*;
use crate::ratgeo::{int, qvec, rat};

fn poly(raw: &[&[i64]]) -> VPolytope {
    convex_hull(&raw.iter().map(|p| qvec(p)).collect::<Vec<_>>()).unwrap()
}

fn e(n: usize, i: usize) -> QVector {
    ratgeo::unit_vec(n, i)
}

fn seg(n: usize, i: usize) -> VPolytope {
    VPolytope::segment(ratgeo::zero_vec(n), e(n, i)).unwrap()
}

#[test]
fn hull_drops_interior_point() {
    let t = convex_hull(&[qvec(&[0, 0]), qvec(&[1, 0]), qvec(&[0, 1]), vec![rat(1, 4), rat(1, 4)]]).unwrap();
    assert_eq!(t.vertices(), &[qvec(&[0, 0]), qvec(&[0, 1]), qvec(&[1, 0])]);
}

#[test]
fn hull_of_cube_vertices() {
    let c = VPolytope::cube(3);
    assert_eq!(c.num_vertices(), 8);
    assert_eq!(convex_hull(c.vertices()).unwrap(), c);
}

#[test]
fn hull_of_collinear_points() {
    let s = convex_hull(&[qvec(&[0, 0]), qvec(&[1, 1]), vec![rat(1, 2), rat(1, 2)]]).unwrap();
    assert_eq!(s.vertices(), &[qvec(&[0, 0]), qvec(&[1, 1])]);
    assert_eq!(s.dim(), 1);
}

#[test]
fn hull_rejects_bad_input() {
    assert_eq!(convex_hull(&[]), Err(Error::EmptyInput));
    assert!(convex_hull(&[qvec(&[0, 0]), qvec(&[1])]).is_err());
}

#[test]
fn minkowski_examples() {
    let sq = minkowski_sum(&seg(2, 0), &seg(2, 1)).unwrap();
    assert_eq!(sq, VPolytope::cube(2));
    let shifted = minkowski_sum(&VPolytope::cube(3), &VPolytope::point(qvec(&[1, 2, 3]))).unwrap();
    assert_eq!(shifted, VPolytope::cube(3).translate(&qvec(&[1, 2, 3])).unwrap());
    let doubled = minkowski_sum(&seg(2, 0), &seg(2, 0)).unwrap();
    assert_eq!(doubled.vertices(), &[qvec(&[0, 0]), qvec(&[2, 0])]);
    assert!(minkowski_sum(&seg(2, 0), &seg(3, 0)).is_err());
}

#[test]
fn support_values() {
    let c = VPolytope::cube(3);
    assert_eq!(c.support_value(&qvec(&[1, 1, 1])).unwrap(), int(3));
    assert_eq!(c.support_value(&qvec(&[-1, 0, 0])).unwrap(), int(0));
    let square = minkowski_sum(&seg(4, 0), &seg(4, 1)).unwrap();
    assert_eq!(square.support_value(&e(4, 2)).unwrap(), int(0));
}

#[test]
fn faces() {
    let c = VPolytope::cube(3);
    let f = c.face(&e(3, 0)).unwrap();
    assert_eq!(f.polytope.num_vertices(), 4);
    assert!(f.polytope.vertices().iter().all(|v| v[0] == int(1)));
    assert_eq!(f.polytope.dim(), 2);
    let edge = c.face(&qvec(&[1, 1, 0])).unwrap();
    assert_eq!(edge.polytope.vertices(), &[qvec(&[1, 1, 0]), qvec(&[1, 1, 1])]);
    let whole = seg(2, 0).face(&e(2, 1)).unwrap();
    assert_eq!(whole.polytope, seg(2, 0));
    assert_eq!(c.face(&qvec(&[0, 0, 0])), Err(Error::ZeroVector));
}

#[test]
fn facet_normal_examples() {
    let mut sq = VPolytope::cube(2).facet_normals().unwrap();
    sq.sort();
    assert_eq!(sq, vec![qvec(&[-1, 0]), qvec(&[0, -1]), qvec(&[0, 1]), qvec(&[1, 0])]);
    assert_eq!(VPolytope::cube(3).facet_normals().unwrap().len(), 6);
    let mut tri = VPolytope::standard_simplex(2).facet_normals().unwrap();
    tri.sort();
    assert_eq!(tri, vec![qvec(&[-1, 0]), qvec(&[0, -1]), qvec(&[1, 1])]);
    assert!(VPolytope::point(qvec(&[1, 2])).facet_normals().is_err());
}

#[test]
fn facet_normals_of_lower_dimensional_polytopes_live_in_the_affine_hull() {
    // square in the plane x3 = 1 inside R^3
    let sq = poly(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]]);
    let mut normals = sq.facet_normals().unwrap();
    normals.sort();
    assert_eq!(normals, vec![qvec(&[-1, 0, 0]), qvec(&[0, -1, 0]), qvec(&[0, 1, 0]), qvec(&[1, 0, 0])]);
    // segment from (0,0) to (1,1): normals ±(1,1)
    let s = poly(&[&[0, 0], &[1, 1]]);
    let mut normals = s.facet_normals().unwrap();
    normals.sort();
    assert_eq!(normals, vec![qvec(&[-1, -1]), qvec(&[1, 1])]);
    // skew triangle: normals are orthogonal to the plane normal
    let t = poly(&[&[0, 0, 0], &[1, 0, 1], &[0, 1, 1]]);
    let plane = qvec(&[1, 1, -1]);
    for f in t.facets() {
        assert_eq!(dot(&f.normal, &plane), int(0));
        for (i, v) in t.vertices().iter().enumerate() {
            let val = dot(&f.normal, v);
            if f.vertices.contains(&i) {
                assert_eq!(val, f.offset);
            } else {
                assert!(val < f.offset);
            }
        }
    }
}

#[test]
fn volume_examples() {
    assert_eq!(volume(&VPolytope::cube(3)), ScaledRational::one());
    assert_eq!(volume(&VPolytope::standard_simplex(3)), ScaledRational::rational(rat(1, 6)));
    let diag = poly(&[&[0, 0], &[1, 1]]);
    assert_eq!(volume(&diag), ScaledRational::sqrt(int(2)).unwrap());
    assert_eq!(diag.volume(), int(0));
    assert_eq!(diag.intrinsic_volume(), ScaledRational::sqrt(int(2)).unwrap());
    assert_eq!(VPolytope::point(qvec(&[3])).intrinsic_volume(), ScaledRational::one());
    // skew triangle with legs (1,0,1), (0,1,1): area = |cross|/2 = √3/2
    let t = poly(&[&[0, 0, 0], &[1, 0, 1], &[0, 1, 1]]);
    assert_eq!(volume(&t), ScaledRational::new(rat(1, 2), int(3)).unwrap());
}

#[test]
fn dimension_examples() {
    assert_eq!(dim(&VPolytope::point(qvec(&[1, 2]))), 0);
    let square = minkowski_sum(&seg(4, 0), &seg(4, 1)).unwrap();
    assert_eq!(dim(&square), 2);
    assert_eq!(dim(&VPolytope::cube(4)), 4);
    assert_eq!(dim_of_sum(&[&seg(4, 0), &seg(4, 1), &seg(4, 0)], 4), 2);
}

#[test]
fn degenerate_hulls() {
    // many coplanar points on every facet of an octahedron-like set
    let mut pts = Vec::new();
    for a in -2i64..=2 {
        for b in -2i64..=2 {
            for c in -2i64..=2 {
                if a.abs() + b.abs() + c.abs() <= 2 {
                    pts.push(qvec(&[a, b, c]));
                }
            }
        }
    }
    let oct = convex_hull(&pts).unwrap();
    assert_eq!(oct.num_vertices(), 6);
    assert_eq!(oct.facets().len(), 8);
    assert_eq!(oct.volume(), rat(32, 3));
}

#[test]
fn hull_of_rational_points() {
    let p = convex_hull(&[
        vec![rat(1, 3), rat(0, 1)],
        vec![rat(0, 1), rat(1, 2)],
        vec![rat(-1, 3), rat(0, 1)],
        vec![rat(0, 1), rat(-1, 2)],
        vec![rat(1, 7), rat(1, 7)],
    ])
    .unwrap();
    assert_eq!(p.num_vertices(), 4);
    assert_eq!(p.volume(), rat(1, 3));
}
