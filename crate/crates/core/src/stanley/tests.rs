use super::*;
use crate::mixedvol::mixed_volume_q;
use crate::polytope::VPolytope;
use crate::ratgeo::{int, qvec, rat};
use crate::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn antichain3() -> Poset {
    Poset::parse("*x y1 y2\n").unwrap()
}

fn chain3() -> Poset {
    Poset::parse("y1 *x y2\ny1 < x < y2\n").unwrap()
}

fn worked() -> Poset {
    Poset::parse("y1 *x z1 w1 w2\ny1 < x\nx < z1\ny1 < w1 < w2\nw2 < z1\n").unwrap()
}

fn counts(p: &Poset) -> Vec<u128> {
    rank_sequence(p).counts
}

#[test]
fn parsing() {
    let p = worked();
    assert_eq!(p.len(), 5);
    assert_eq!(p.x(), 1);
    assert!(p.less(0, 2));
    assert_eq!(p.covers().len(), 5);
    assert_eq!(Poset::parse(&p.to_text()).unwrap(), p);
    let p = Poset::parse("# comment\n a *b\n\n a<b # trailing\n").unwrap();
    assert!(p.less(0, 1));

    let err = |s: &str| match Poset::parse(s) {
        Err(Error::Parse(m)) => m,
        other => panic!("{other:?}"),
    };
    assert!(err("a b\n").contains("no element marked"));
    assert!(err("*a b\na < c\n").starts_with("line 2, column 5"));
    assert!(err("*a b\na b\n").starts_with("line 2"));
    assert!(err("*a b\na < a\n").contains("reflexive"));
    assert!(err("*a b\na < b\nb < a\n").contains("cyclic"));
    assert!(err("*a *b\n").contains("more than one"));
    assert!(err("*a a\n").contains("duplicate"));
}

#[test]
fn rank_sequence_examples() {
    assert_eq!(counts(&antichain3()), vec![2, 2, 2]);
    assert_eq!(counts(&chain3()), vec![0, 1, 0]);
    assert_eq!(counts(&worked()), vec![0, 1, 1, 1, 0]);
    let single = Poset::from_relations(1, 0, &[]).unwrap();
    assert_eq!(counts(&single), vec![1]);
}

#[test]
fn dp_matches_enumeration() {
    for n in 1..=5 {
        for p in pointed_posets(n).unwrap() {
            assert_eq!(rank_sequence(&p), rank_sequence_by_enumeration(&p), "{}", p.to_text());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let p = random_poset(&mut rng, 8).unwrap();
        assert_eq!(rank_sequence(&p), rank_sequence_by_enumeration(&p));
    }
}

#[test]
fn generation_counts() {
    let natural: Vec<usize> = (1..=6).map(|n| natural_posets(n).len()).collect();
    assert_eq!(natural, vec![1, 2, 7, 40, 357, 4824]);
    // pointed posets up to isomorphism: {•}; {x y}, {x<y}, {y<x}; and 11 on three elements
    let pointed: Vec<usize> = (1..=3).map(|n| pointed_posets(n).unwrap().len()).collect();
    assert_eq!(pointed, vec![1, 3, 11]);
}

#[test]
fn canonical_forms_identify_relabelings() {
    let a = Poset::from_relations(3, 0, &[(1, 2)]).unwrap();
    let b = Poset::from_relations(3, 0, &[(2, 1)]).unwrap();
    let c = Poset::from_relations(3, 1, &[(1, 2)]).unwrap();
    assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    assert_ne!(canonical_form(&a).unwrap(), canonical_form(&c).unwrap());
}

fn square() -> VPolytope {
    VPolytope::new(&[qvec(&[0, 0]), qvec(&[1, 0]), qvec(&[0, 1]), qvec(&[1, 1])]).unwrap()
}

#[test]
fn order_polytope_examples() {
    let (k, l) = order_polytopes_kl(&antichain3()).unwrap();
    assert_eq!(k, square());
    assert_eq!(l, square());

    let (k, l) = order_polytopes_kl(&chain3()).unwrap();
    assert_eq!(k, VPolytope::segment(qvec(&[0, 1]), qvec(&[1, 1])).unwrap());
    assert_eq!(l, VPolytope::segment(qvec(&[0, 0]), qvec(&[0, 1])).unwrap());

    let p = Poset::parse("y1 *x y2\ny1 < x\n").unwrap();
    let (k, l) = order_polytopes_kl(&p).unwrap();
    assert_eq!(k, square());
    assert_eq!(l, VPolytope::segment(qvec(&[0, 0]), qvec(&[0, 1])).unwrap());
}

#[test]
fn order_polytope_dimensions_and_facets() {
    for n in 2..=5 {
        for p in pointed_posets(n).unwrap() {
            let x = p.x();
            let (k, l) = order_polytopes_kl(&p).unwrap();
            assert_eq!(k.dim(), n - 1 - p.count_above(x));
            assert_eq!(l.dim(), n - 1 - p.count_below(x));
            assert_eq!(crate::polytope::minkowski_sum(&k, &l).unwrap().dim(), n - 1);
            // vertices satisfy the defining constraints of K and L
            for (ca, &a) in p.others().iter().enumerate() {
                for v in k.vertices() {
                    if p.less(x, a) {
                        assert_eq!(v[ca], int(1));
                    }
                }
                for v in l.vertices() {
                    if p.less(a, x) {
                        assert_eq!(v[ca], int(0));
                    }
                }
            }
            assert!(order_polytope_facet_audit(&p, &p.others()).unwrap());
            let half: Vec<usize> = p.others().into_iter().step_by(2).collect();
            assert!(order_polytope_facet_audit(&p, &half).unwrap());
        }
    }
}

#[test]
fn representation_examples() {
    assert_eq!(
        stanley_mixed_volumes(&antichain3()).unwrap(),
        vec![int(1), int(1), int(1)]
    );
    assert_eq!(stanley_mixed_volumes(&chain3()).unwrap(), vec![int(0), rat(1, 2), int(0)]);
    assert!(stanley_representation_check(&worked()).unwrap());
    // polarization agrees on the middle term of the worked example
    let (k, l) = order_polytopes_kl(&worked()).unwrap();
    let mv = mixed_volume_q(&[&k, &k, &l, &l]).unwrap();
    assert_eq!(mv, stanley_mixed_volumes(&worked()).unwrap()[2]);
    assert_eq!(mv * int(24), int(1));
    assert!(matches!(
        stanley_representation_check(&Poset::from_relations(1, 0, &[]).unwrap()),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn representation_small_posets() {
    for n in 2..=4 {
        for p in pointed_posets(n).unwrap() {
            assert!(stanley_representation_check(&p).unwrap(), "{}", p.to_text());
        }
    }
}

#[test]
fn counting_tests() {
    assert!(trivial_extremal_test(&chain3(), 1).unwrap());
    assert!(!trivial_extremal_test(&chain3(), 2).unwrap());
    assert!((1..=3).all(|i| !trivial_extremal_test(&antichain3(), i).unwrap()));
    assert!(trivial_extremal_test(&worked(), 5).unwrap());
    assert!(matches!(trivial_extremal_test(&worked(), 0), Err(Error::Precondition(_))));
    assert!(matches!(trivial_extremal_test(&worked(), 6), Err(Error::Precondition(_))));

    assert!(extremal_condition_d(&antichain3(), 2).unwrap());
    assert!(extremal_condition_d(&worked(), 3).unwrap());
    assert!(!extremal_condition_d(&worked(), 2).unwrap());
    assert!(matches!(extremal_condition_d(&worked(), 1), Err(Error::Precondition(_))));
    let p = Poset::parse("y1 y2 *x y3\ny1 < y2 < x\n").unwrap();
    assert!(matches!(extremal_condition_d(&p, 2), Err(Error::Precondition(_))));
}

#[test]
fn audit_examples() {
    let r = exst_equivalence_audit(&antichain3());
    assert_eq!(r.rows, vec![ExstRow { i: 2, a: true, b: true, c: true, d: true }]);
    assert!(r.passes());

    let r = exst_equivalence_audit(&chain3());
    assert_eq!(r.rows, vec![ExstRow { i: 2, a: false, b: false, c: false, d: false }]);
    assert!(r.passes());

    let r = exst_equivalence_audit(&worked());
    assert!(r.passes());
    assert_eq!(r.equality_indices(), vec![3]);
    assert_eq!(r.condition_d_indices(), vec![3]);
}

#[test]
fn audit_exhaustive_small() {
    for n in 1..=5 {
        for p in pointed_posets(n).unwrap() {
            let r = exst_equivalence_audit(&p);
            assert!(r.passes(), "{}{r:?}", p.to_text());
        }
    }
}

#[test]
fn shape_family_intervals() {
    for (k, l, r, s, t) in [(1, 1, 1, 1, 1), (2, 1, 1, 2, 1), (1, 2, 2, 1, 2), (1, 1, 3, 1, 1)] {
        let p = shape_family(k, l, r, s, t).unwrap();
        assert_eq!(p.len(), k + l + r + s + t);
        let c = rank_sequence(&p);
        let pos: Vec<usize> = (1..=c.len()).filter(|&i| c.get(i) > 0).collect();
        let eq = c.equality_indices();
        assert!(shape_check(&c));
        assert_eq!(pos[0] - 1, k);
        assert_eq!(c.len() - pos[pos.len() - 1], l);
        assert_eq!(eq.len(), t);
        assert_eq!(eq[0] - pos[0], s);
        assert_eq!(pos[pos.len() - 1] - eq[eq.len() - 1], r);
        assert!(exst_equivalence_audit(&p).passes());
    }
    assert_eq!(counts(&shape_family(1, 1, 1, 1, 1).unwrap()), vec![0, 1, 1, 1, 0]);
}
