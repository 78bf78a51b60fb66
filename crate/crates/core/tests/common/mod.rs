#![allow(dead_code)]

use afx_core::polytope::{convex_hull, minkowski_sum, VPolytope};
use afx_core::ratgeo::{int, unit_vec, zero_vec, QVector};
use proptest::prelude::*;

pub fn seg(n: usize, i: usize) -> VPolytope {
    VPolytope::segment(zero_vec(n), unit_vec(n, i)).unwrap()
}

pub fn coord_box(n: usize, sides: &[i64]) -> VPolytope {
    let lo = zero_vec(n);
    let hi: QVector = sides.iter().map(|&s| int(s)).collect();
    VPolytope::boxed(&lo, &hi).unwrap()
}

pub fn square(n: usize, i: usize, j: usize) -> VPolytope {
    minkowski_sum(&seg(n, i), &seg(n, j)).unwrap()
}

pub fn hull(points: &[Vec<i64>]) -> VPolytope {
    let pts: Vec<QVector> = points.iter().map(|p| p.iter().map(|&c| int(c)).collect()).collect();
    convex_hull(&pts).unwrap()
}

/// Integer point clouds in `[-2, 2]^n`.
pub fn cloud(n: usize, count: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = VPolytope> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, n), count).prop_map(|p| hull(&p))
}

/// Full-dimensional integer polytopes: a random cloud plus a small simplex.
pub fn full_body(n: usize) -> impl Strategy<Value = VPolytope> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, n), 1..=4).prop_map(move |mut p| {
        let base = p[0].clone();
        for i in 0..n {
            let mut q = base.clone();
            q[i] += 1;
            p.push(q);
        }
        hull(&p)
    })
}

/// Axis-parallel boxes with sides in `0..=2` (possibly degenerate).
pub fn box_strategy(n: usize) -> impl Strategy<Value = VPolytope> {
    prop::collection::vec(0i64..=2, n).prop_map(move |s| coord_box(n, &s))
}

pub fn rational_vec(n: usize) -> impl Strategy<Value = QVector> {
    prop::collection::vec((-5i64..=5, 1i64..=3), n)
        .prop_map(|v| v.into_iter().map(|(a, b)| afx_core::ratgeo::rat(a, b)).collect())
}

/// Fixed-size runs without regression files.
pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}
