use super::*;
use crate::criticality::CriticalityClass;
use crate::mixedvol::{BodyCollection, SupportDifference};
use crate::polytope::{minkowski_sum, VPolytope};
use crate::ratgeo::{int, qvec, rat, unit_vec, zero_vec, Rational};
use crate::Error;

fn seg(n: usize, i: usize) -> VPolytope {
    VPolytope::segment(zero_vec(n), unit_vec(n, i)).unwrap()
}

fn square(n: usize) -> VPolytope {
    minkowski_sum(&seg(n, 0), &seg(n, 1)).unwrap()
}

fn cube3() -> BodyCollection {
    BodyCollection::new(3, vec![VPolytope::cube(3)]).unwrap()
}

fn deg() -> BodyCollection {
    BodyCollection::new(4, vec![VPolytope::cube(4), square(4)]).unwrap()
}

#[test]
fn cube_graph_is_the_octahedron() {
    let g = build_background(&cube3(), 0).unwrap();
    assert_eq!(g.num_facets(), 6);
    assert_eq!(g.edges.len(), 12);
    assert!(g.edges.iter().all(|e| e.active && e.weight == int(1)));
    assert_eq!(g.active_vertices.len(), 6);
    assert_eq!(g.vertices.len(), 8);
    assert!(g.vertices.iter().all(|v| v.facets.len() == 3));
    let s = alexandrov_system(&g, None).unwrap();
    assert!(s.is_symmetric());
    assert_eq!(6 - s.rank(), 3);
}

#[test]
fn support_membership() {
    let g = build_background(&cube3(), 0).unwrap();
    assert!(support_of_sb(&g, &qvec(&[1, 1, 0])).unwrap());
    assert!(support_of_sb(&g, &qvec(&[1, 0, 0])).unwrap());
    assert!(!support_of_sb(&g, &qvec(&[1, 1, 1])).unwrap());
    let g = build_background(&deg(), 0).unwrap();
    assert!(support_of_sb(&g, &qvec(&[1, 0, 1, 0])).unwrap());
    assert!(support_of_sb(&g, &qvec(&[2, 0, -1, 0])).unwrap());
    assert!(!support_of_sb(&g, &qvec(&[1, 1, 0, 0])).unwrap());
    assert_eq!(support_of_sb(&g, &qvec(&[0, 0, 0, 0])), Err(Error::ZeroVector));
}

#[test]
fn degenerate_example_graph() {
    let g = build_background(&deg(), 0).unwrap();
    assert_eq!(g.num_facets(), 8);
    assert_eq!(g.edges.len(), 24);
    let inactive: Vec<(QVecPair, bool)> = g
        .edges
        .iter()
        .map(|e| ((g.normals[e.i].clone(), g.normals[e.j].clone()), e.active))
        .collect();
    for ((a, b), active) in inactive {
        let planar = |v: &Vec<Rational>| v[2] == int(0) && v[3] == int(0);
        assert_eq!(!active, planar(&a) && planar(&b), "{a:?} {b:?}");
    }
    assert_eq!(g.active_vertices.len(), 8);
}

type QVecPair = (Vec<Rational>, Vec<Rational>);

#[test]
fn null_collection_has_no_active_edges() {
    let p = BodyCollection::new(4, vec![seg(4, 0), seg(4, 0)]).unwrap();
    let g = build_background(&p, 0).unwrap();
    assert!(g.active_edges().next().is_none());
    assert!(g.active_vertices.is_empty());
    assert!(alexandrov_system(&g, None).unwrap().is_zero());
    assert!(matches!(extremal_space(&p), Err(Error::Precondition(_))));
}

#[test]
fn cube_space_is_linear() {
    let x = extremal_space(&cube3()).unwrap();
    assert_eq!(x.dim(), 3);
    assert_eq!(x.formula_dim(), 3);
    assert_eq!(x.decomposition_rank(), 3);
    for b in &x.basis {
        assert!(x.linear_fit(b).unwrap().is_some());
    }
}

#[test]
fn degenerate_example_space() {
    let x = extremal_space(&deg()).unwrap();
    assert_eq!(x.criticality.class, CriticalityClass::CriticalNotSupercritical);
    assert_eq!(x.dim(), 5);
    assert_eq!(x.dim_l, 4);
    assert_eq!(x.components.len(), 1);
    assert_eq!(x.components[0].omega.len(), 4);
    assert_eq!(x.components[0].dim, 1);
    assert_eq!(x.formula_dim(), 5);
    assert_eq!(x.decomposition_rank(), 5);
    assert!(x.basis.iter().any(|b| x.linear_fit(b).unwrap().is_none()));
}

#[test]
fn subcritical_space() {
    let p = BodyCollection::new(4, vec![square(4), square(4)]).unwrap();
    let x = extremal_space(&p).unwrap();
    assert_eq!(x.criticality.class, CriticalityClass::SubcriticalNotCritical);
    let active: Vec<_> = x.graph.active_edges().collect();
    assert_eq!(active.len(), 4);
    assert!(active.iter().all(|e| e.weight == int(1)));
    assert_eq!(x.dim(), 2);
    assert_eq!(x.formula_dim(), 2);
    assert_eq!(x.decomposition_rank(), 2);
}

#[test]
fn extremality_examples() {
    let q = VPolytope::cube(3);
    let v = qvec(&[1, -2, 3]);
    let f = SupportDifference::new(q.translate(&v).unwrap(), q.clone(), int(1)).unwrap();
    let out = extremality_test(&cube3(), &f).unwrap();
    assert!(out.extremal);
    let d = out.decomposition.unwrap();
    assert_eq!(d.s, v);
    assert!(d.is_linear());

    let f = SupportDifference::new(q.scale(&int(2)), q.clone(), int(1)).unwrap();
    let out = extremality_test(&cube3(), &f).unwrap();
    assert!(!out.extremal);
    assert!(!out.measure.is_zero());

    let c1 = VPolytope::cube(4);
    let k = minkowski_sum(&c1, &seg(4, 0)).unwrap();
    let l = minkowski_sum(&c1, &seg(4, 1)).unwrap();
    let f = SupportDifference::new(k, l, int(1)).unwrap();
    let out = extremality_test(&deg(), &f).unwrap();
    assert!(out.extremal);
    let d = out.decomposition.unwrap();
    assert_eq!(d.s, vec![rat(1, 2), rat(-1, 2), int(0), int(0)]);
    // Ω_1 in sorted order: −e1, −e2, e2, e1
    assert_eq!(d.components, vec![vec![rat(1, 2), rat(-1, 2), rat(-1, 2), rat(1, 2)]]);
}

#[test]
fn decomposition_is_unique_modulo_linear_parts() {
    let x = extremal_space(&deg()).unwrap();
    let c1 = VPolytope::cube(4);
    let f = SupportDifference::new(minkowski_sum(&c1, &seg(4, 0)).unwrap(), minkowski_sum(&c1, &seg(4, 1)).unwrap(), int(1)).unwrap();
    let shifted = SupportDifference::new(f.plus.translate(&qvec(&[3, 1, -2, 5])).unwrap(), f.minus.clone(), int(1)).unwrap();
    let a = extremality_test_in(&x, &f).unwrap().decomposition.unwrap();
    let b = extremality_test_in(&x, &shifted).unwrap().decomposition.unwrap();
    assert_eq!(a.components, b.components);
    assert_eq!(crate::ratgeo::sub(&b.s, &a.s), qvec(&[3, 1, -2, 5]));
}

#[test]
fn realized_basis_vectors_are_extremal() {
    let x = extremal_space(&deg()).unwrap();
    for b in &x.basis {
        let (q, _) = realization(&x.graph, b).unwrap();
        let f = SupportDifference::new(q, x.graph.background.clone(), int(1)).unwrap();
        assert!(extremality_test_in(&x, &f).unwrap().extremal);
    }
    // a vector outside the kernel is not
    let mut bad = zero_vec(x.graph.num_facets());
    bad[0] = int(1);
    let (q, _) = realization(&x.graph, &bad).unwrap();
    let f = SupportDifference::new(q, x.graph.background.clone(), int(1)).unwrap();
    assert!(!extremality_test_in(&x, &f).unwrap().extremal);
}

#[test]
fn local_extension_examples() {
    let x = extremal_space(&cube3()).unwrap();
    for b in &x.basis {
        let ext = local_af_extension(&x.graph, 0, b).unwrap();
        assert_eq!(&ext.z, b);
        assert!(ext.quadratic.iter().all(|q| *q == int(0)));
    }
    let x = extremal_space(&deg()).unwrap();
    for b in &x.basis {
        let ext = local_af_extension(&x.graph, 1, b).unwrap();
        assert!(ext.audit_passes(), "{:?}", ext.quadratic);
    }
    let mut bad = zero_vec(x.graph.num_facets());
    bad[0] = int(1);
    assert!(matches!(local_af_extension(&x.graph, 1, &bad), Err(Error::Precondition(_))));
}
