//! Seeded random sequence specs for the property sweeps.

use cyclemod_core::sequence::SequenceSpec;
use cyclemod_core::Modulus;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0x5EED_0C4C;
pub const MAX_BLOCK_LEN: usize = 12;

/// `cases` specs with moduli in `2..=m_max`: half random blocks of length
/// at most [`MAX_BLOCK_LEN`], half general Fibonacci sequences with random
/// initial values. The same seed always yields the same corpus.
pub fn fuzz_corpus(seed: u64, cases: usize, m_max: u64) -> Vec<SequenceSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..cases)
        .map(|_| {
            let m = Modulus::new(rng.gen_range(2..=m_max.max(2))).expect("m >= 2");
            if rng.gen_bool(0.5) {
                let len = rng.gen_range(1..=MAX_BLOCK_LEN);
                // entries deliberately exceed m so reduction is exercised
                let block: Vec<i64> = (0..len).map(|_| rng.gen_range(0..3 * m.get() as i64)).collect();
                SequenceSpec::block(&block, m).expect("non-empty block")
            } else {
                let a = rng.gen_range(0..m.get() as i64);
                let b = rng.gen_range(0..m.get() as i64);
                SequenceSpec::general_fibonacci(a, b, m)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use cyclemod_core::sequence::SequenceKind;

    #[test]
    fn corpus_is_reproducible() {
        assert_eq!(fuzz_corpus(7, 200, 60), fuzz_corpus(7, 200, 60));
        assert_ne!(fuzz_corpus(7, 200, 60), fuzz_corpus(8, 200, 60));
    }

    #[test]
    fn corpus_respects_bounds() {
        let corpus = fuzz_corpus(1, 2000, 60);
        let mut blocks = 0;
        for spec in &corpus {
            assert!((2..=60).contains(&spec.modulus().get()));
            match spec.kind() {
                SequenceKind::Block(b) => {
                    blocks += 1;
                    assert!((1..=MAX_BLOCK_LEN).contains(&b.len()));
                }
                SequenceKind::Recurrence { coefficients, .. } => assert_eq!(coefficients, &[1, 1]),
            }
        }
        assert!(blocks > 800 && blocks < 1200);
    }
}
