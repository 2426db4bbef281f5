use cyclemod_core::period::minimal_period;
use cyclemod_core::sequence::{partial_sum, SequenceSpec};
use cyclemod_core::Modulus;
use proptest::prelude::*;

fn arb_spec() -> impl Strategy<Value = SequenceSpec> {
    let block = (2u64..=30, prop::collection::vec(-100i64..100, 1..=10))
        .prop_map(|(m, xs)| SequenceSpec::block(&xs, Modulus::new(m).unwrap()).unwrap());
    let fib = (2u64..=30, -50i64..50, -50i64..50)
        .prop_map(|(m, a, b)| SequenceSpec::general_fibonacci(a, b, Modulus::new(m).unwrap()));
    prop_oneof![block, fib]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn partial_sum_is_running_sum(spec in arb_spec()) {
        let m = spec.modulus().get();
        let s = partial_sum(&spec).unwrap();
        let terms = spec.prefix(500);
        let sums = s.prefix(500);
        let mut acc = 0;
        for j in 0..500 {
            acc = (acc + terms[j]) % m;
            prop_assert_eq!(sums[j], acc, "index {}", j);
        }
    }

    #[test]
    fn realized_block_is_purely_periodic(spec in arb_spec()) {
        let s = partial_sum(&spec).unwrap();
        let len = s.as_block().unwrap().len();
        let lazy: Vec<u64> = spec.running_sums().take(3 * len).collect();
        prop_assert_eq!(s.prefix(3 * len), lazy);
        prop_assert_eq!(minimal_period(&s).unwrap(), len as u64);
    }

    #[test]
    fn block_reduction_ignores_multiples_of_m(
        m in 2u64..=40,
        xs in prop::collection::vec(-100i64..100, 1..=12),
    ) {
        let modulus = Modulus::new(m).unwrap();
        let shifted: Vec<i64> = xs.iter().map(|x| x + m as i64).collect();
        let a = SequenceSpec::block(&xs, modulus).unwrap();
        let b = SequenceSpec::block(&shifted, modulus).unwrap();
        prop_assert_eq!(a.prefix(50), b.prefix(50));
    }
}

#[test]
fn non_minimal_block_still_detected() {
    let m = Modulus::new(5).unwrap();
    let doubled = SequenceSpec::block(&[0, 1, 1, 0, 1, 1], m).unwrap();
    assert_eq!(doubled.as_block().unwrap().len(), 6);
    assert_eq!(minimal_period(&doubled), Ok(3));
    let s = partial_sum(&doubled).unwrap();
    assert_eq!(s.as_block().unwrap().len(), 15);
}
