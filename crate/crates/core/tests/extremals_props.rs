mod common;

use afx_core::criticality::{classify, degenerate_pair_test, CriticalityClass};
use afx_core::extremals::{extremal_space, extremality_test, extremality_test_in, realization, ExtremalSpace};
use afx_core::mixedvol::{BodyCollection, SupportDifference};
use afx_core::polytope::{minkowski_sum, VPolytope};
use afx_core::ratgeo::{int, sub};
use common::{box_strategy, coord_box, full_body, rational_vec, seg, square};
use proptest::prelude::*;

/// Reference collections in R⁴: a full box plus a box with some zero sides.
fn critical_or_better() -> impl Strategy<Value = BodyCollection> {
    (prop::collection::vec(1i64..=2, 4), box_strategy(4)).prop_map(|(s, b)| {
        BodyCollection::new(4, vec![coord_box(4, &s), b]).unwrap()
    })
}

fn space_props(x: &ExtremalSpace) -> Result<(), TestCaseError> {
    prop_assert_eq!(x.dim(), x.formula_dim());
    prop_assert_eq!(x.dim(), x.decomposition_rank());
    for b in &x.basis {
        let (q, _) = realization(&x.graph, b).unwrap();
        let f = SupportDifference::new(q, x.graph.background.clone(), int(1)).unwrap();
        prop_assert!(extremality_test_in(x, &f).unwrap().extremal);
        if x.criticality.class == CriticalityClass::Supercritical {
            prop_assert!(x.linear_fit(b).unwrap().is_some());
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(common::config(6))]

    #[test]
    fn extremal_space_in_r3(p in full_body(3)) {
        let c = BodyCollection::new(3, vec![p]).unwrap();
        let x = extremal_space(&c).unwrap();
        prop_assert_eq!(x.dim(), 3);
        space_props(&x)?;
    }

    #[test]
    fn extremal_space_in_r4(c in critical_or_better()) {
        prop_assume!(classify(&c).class != CriticalityClass::Null);
        space_props(&extremal_space(&c).unwrap())?;
    }

    #[test]
    fn decomposition_is_unique(c in critical_or_better(), v in rational_vec(4), k in box_strategy(4)) {
        prop_assume!(classify(&c).class != CriticalityClass::Null);
        let x = extremal_space(&c).unwrap();
        let f = SupportDifference::new(minkowski_sum(&x.graph.background, &k).unwrap(), x.graph.background.clone(), int(1)).unwrap();
        let out = extremality_test_in(&x, &f).unwrap();
        prop_assume!(out.extremal);
        let d = out.decomposition.unwrap();
        let g = SupportDifference::new(f.plus.translate(&v).unwrap(), f.minus.clone(), int(1)).unwrap();
        let e = extremality_test_in(&x, &g).unwrap().decomposition.unwrap();
        prop_assert_eq!(&d.components, &e.components);
        let shift = sub(&e.s, &d.s);
        // the linear part moves by the projection of v onto L⊥
        for b in &x.linear_basis {
            prop_assert_eq!(afx_core::ratgeo::dot(b, &shift), afx_core::ratgeo::dot(b, &v));
        }
    }
}

#[test]
fn degenerate_functions_are_extremal() {
    let n = 4;
    let mut family: Vec<VPolytope> = (0..2).map(|i| seg(n, i)).collect();
    family.push(square(n, 0, 1));
    family.push(VPolytope::segment(afx_core::ratgeo::zero_vec(n), afx_core::ratgeo::qvec(&[1, 1, 0, 0])).unwrap());
    family.push(VPolytope::standard_simplex(2).map(|v| Ok(vec![v[0].clone(), v[1].clone(), int(0), int(0)])).unwrap());
    let refs = [
        BodyCollection::new(n, vec![VPolytope::cube(n), square(n, 0, 1)]).unwrap(),
        BodyCollection::new(n, vec![coord_box(n, &[2, 1, 1, 3]), square(n, 0, 1).scale(&int(2))]).unwrap(),
    ];
    let mut found = 0;
    for p in &refs {
        for m in &family {
            for nb in &family {
                if let Some(w) = degenerate_pair_test(p, m, nb).unwrap() {
                    let f = SupportDifference::new(m.clone(), nb.clone(), w.rescale.clone()).unwrap();
                    let out = extremality_test(p, &f).unwrap();
                    assert!(out.extremal, "{m:?} {nb:?}");
                    found += 1;
                }
            }
        }
    }
    assert!(found >= 10, "{found}");
}
