mod common;

use magarr_core::arrangement::Arrangement;
use proptest::prelude::*;

fn arrangements() -> impl Strategy<Value = Arrangement> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 3..=7)
        .prop_map(common::dedupe)
        .prop_filter("between 3 and 5 hyperplanes", |rows| (3..=5).contains(&rows.len()))
        .prop_map(|rows| Arrangement::from_integers(3, &rows).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, ..ProptestConfig::default() })]

    #[test]
    fn zaslavsky_count(a in arrangements()) {
        common::zaslavsky(&a);
    }

    #[test]
    fn partial_cube_and_antipodes(a in arrangements()) {
        common::partial_cube_and_antipodes(&a);
    }

    #[test]
    fn gates_and_tits_laws(a in arrangements()) {
        common::gates_and_tits_laws(&a);
    }

    #[test]
    fn chains_euler_and_series_agree(a in arrangements()) {
        common::chains_euler_and_series(&a, 5);
    }
}
