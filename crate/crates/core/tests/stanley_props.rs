mod common;

use afx_core::stanley::{exst_equivalence_audit, random_poset, rank_sequence, rank_sequence_by_enumeration, Poset};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn poset(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Poset> {
    (n, any::<u64>()).prop_map(|(n, seed)| random_poset(&mut ChaCha8Rng::seed_from_u64(seed), n).unwrap())
}

proptest! {
    #![proptest_config(common::config(64))]

    #[test]
    fn rank_sequences_are_log_concave(p in poset(1..=12)) {
        let r = rank_sequence(&p);
        prop_assert!(r.is_log_concave());
        prop_assert!(afx_core::stanley::shape_check(&r));
    }

    #[test]
    fn counting_agrees_with_enumeration(p in poset(1..=7)) {
        prop_assert_eq!(rank_sequence(&p), rank_sequence_by_enumeration(&p));
    }

    #[test]
    fn equality_conditions_agree(p in poset(2..=8)) {
        let r = exst_equivalence_audit(&p);
        prop_assert!(r.passes(), "{}{:?}", p.to_text(), r);
    }

    #[test]
    fn text_round_trip(p in poset(1..=9)) {
        prop_assert_eq!(Poset::parse(&p.to_text()).unwrap(), p);
    }
}
