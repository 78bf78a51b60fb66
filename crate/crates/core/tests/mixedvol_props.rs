mod common;

use afx_core::mixedvol::{
    mixed_area_measure, mixed_volume, mixed_volume_q, mixvolarea_check, positivity, projection_formula_check,
    BodyCollection,
};
use afx_core::polytope::{minkowski_sum, VPolytope};
use afx_core::ratgeo::{int, Rational, Subspace};
use common::{box_strategy, cloud, full_body, rational_vec};
use num_traits::Zero;
use proptest::prelude::*;

fn coll(n: usize, bodies: Vec<VPolytope>) -> BodyCollection {
    BodyCollection::new(n, bodies).unwrap()
}

proptest! {
    #![proptest_config(common::config(24))]

    #[test]
    fn symmetric_under_permutation(a in cloud(3, 2..=5), b in cloud(3, 2..=5), c in cloud(3, 2..=5)) {
        let v = mixed_volume_q(&[&a, &b, &c]).unwrap();
        prop_assert_eq!(&v, &mixed_volume_q(&[&b, &c, &a]).unwrap());
        prop_assert_eq!(&v, &mixed_volume_q(&[&c, &a, &b]).unwrap());
        prop_assert_eq!(&v, &mixed_volume_q(&[&b, &a, &c]).unwrap());
    }

    #[test]
    fn multilinear_in_first_slot(a in cloud(3, 2..=4), a2 in cloud(3, 2..=4), b in full_body(3), l in 1i64..=3, m in 0i64..=2) {
        let (l, m) = (int(l), int(m));
        let combo = minkowski_sum(&a.scale(&l), &a2.scale(&m)).unwrap();
        let lhs = mixed_volume_q(&[&combo, &b, &b]).unwrap();
        let rhs = &l * mixed_volume_q(&[&a, &b, &b]).unwrap() + &m * mixed_volume_q(&[&a2, &b, &b]).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn translation_invariant(a in cloud(3, 2..=5), b in full_body(3), v in rational_vec(3)) {
        let c = coll(3, vec![a.clone(), b.clone()]);
        let t = coll(3, vec![a.translate(&v).unwrap(), b.clone()]);
        prop_assert_eq!(mixed_area_measure(&c).unwrap(), mixed_area_measure(&t).unwrap());
        prop_assert_eq!(mixed_volume_q(&[&a, &b, &b]).unwrap(), mixed_volume_q(&[&a.translate(&v).unwrap(), &b, &b]).unwrap());
    }

    #[test]
    fn alexandrov_fenchel(k in full_body(3), l in cloud(3, 2..=5), p in cloud(3, 2..=5)) {
        let kl = mixed_volume_q(&[&k, &l, &p]).unwrap();
        let kk = mixed_volume_q(&[&k, &k, &p]).unwrap();
        let ll = mixed_volume_q(&[&l, &l, &p]).unwrap();
        prop_assert!(&kl * &kl >= kk * ll);
    }

    #[test]
    fn area_measures_are_closed(a in cloud(3, 2..=5), b in cloud(3, 2..=5)) {
        prop_assert!(mixed_area_measure(&coll(3, vec![a, b])).unwrap().is_closed());
    }

    #[test]
    fn mixed_volume_from_area_measure(k in cloud(3, 1..=5), a in cloud(3, 2..=5), b in cloud(3, 2..=5)) {
        prop_assert!(mixvolarea_check(&k, &coll(3, vec![a, b])).unwrap());
    }

    #[test]
    fn positivity_matches_sign(a in box_strategy(3), b in box_strategy(3), c in box_strategy(3)) {
        let col = coll(3, vec![a, b, c]);
        prop_assert_eq!(positivity(&col), !mixed_volume(&col).unwrap().is_zero());
    }

    #[test]
    fn projection_formula(k in cloud(2, 2..=5), a in cloud(3, 2..=5)) {
        // first block inside the span of e1, e2
        let k3 = k.map(|v| Ok(vec![v[0].clone(), v[1].clone(), Rational::zero()])).unwrap();
        let e = Subspace::span(3, &[afx_core::ratgeo::unit_vec(3, 0), afx_core::ratgeo::unit_vec(3, 1)]).unwrap();
        prop_assert!(projection_formula_check(&e, &coll(3, vec![k3.clone(), k3, a])).unwrap());
    }
}
