use cyclemod::spec_json::{parse_spec, to_json};
use cyclemod_core::sequence::SequenceSpec;
use cyclemod_core::Modulus;
use proptest::prelude::*;

fn arb_spec() -> impl Strategy<Value = SequenceSpec> {
    let block = (2u64..=1000, prop::collection::vec(any::<i32>(), 1..=16)).prop_map(|(m, xs)| {
        let xs: Vec<i64> = xs.into_iter().map(i64::from).collect();
        SequenceSpec::block(&xs, Modulus::new(m).unwrap()).unwrap()
    });
    let rec = (2u64..=1000, prop::collection::vec((any::<i32>(), any::<i32>()), 1..=4)).prop_filter_map(
        "unit trailing coefficient",
        |(m, pairs)| {
            let (c, x): (Vec<i64>, Vec<i64>) = pairs.into_iter().map(|(c, x)| (c as i64, x as i64)).unzip();
            SequenceSpec::recurrence(&c, &x, Modulus::new(m).unwrap()).ok()
        },
    );
    prop_oneof![block, rec]
}

proptest! {
    #[test]
    fn json_round_trip(spec in arb_spec()) {
        prop_assert_eq!(parse_spec(&to_json(&spec)).unwrap(), spec);
    }
}
