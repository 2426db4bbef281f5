//! Exact identities for general Fibonacci sequences `F(a, b)` and their
//! higher partial sums, plus Pisano periods and the Freyd–Brown bounds.
//!
//! Identities are checked over `Z` with big integers; nothing here is
//! reduced modulo `m` except the period functions.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::period::minimal_period;
use crate::residue::Modulus;
use crate::sequence::SequenceSpec;

/// Initial values `F_0 = a`, `F_1 = b` of a general Fibonacci sequence.
/// Any integers are allowed, negative ones included.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FibPair {
    pub a: BigInt,
    pub b: BigInt,
}

impl FibPair {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        FibPair {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn fibonacci() -> Self {
        FibPair::new(0, 1)
    }

    pub fn lucas() -> Self {
        FibPair::new(2, 1)
    }

    /// The same recurrence reduced modulo `m`.
    pub fn reduced(&self, m: Modulus) -> SequenceSpec {
        SequenceSpec::general_fibonacci(reduce_big(&self.a, m), reduce_big(&self.b, m), m)
    }
}

fn reduce_big(x: &BigInt, m: Modulus) -> i64 {
    let m = BigInt::from(m.get());
    let mut r = x % &m;
    if r < BigInt::zero() {
        r += &m;
    }
    r.to_i64().expect("residue fits in i64")
}

/// `F(a, b)_0, ..., F(a, b)_{len-1}` over `Z`.
fn fib_terms(pair: &FibPair, len: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(len);
    let (mut x, mut y) = (pair.a.clone(), pair.b.clone());
    for _ in 0..len {
        let next = &x + &y;
        out.push(core::mem::replace(&mut x, core::mem::replace(&mut y, next)));
    }
    out
}

/// `S^level F(a, b)_n` for `n < len`, by repeated running sums.
pub fn derived_terms(pair: &FibPair, level: usize, len: usize) -> Vec<BigInt> {
    let mut terms = fib_terms(pair, len);
    for _ in 0..level {
        let mut acc = BigInt::zero();
        for t in terms.iter_mut() {
            acc += &*t;
            *t = acc.clone();
        }
    }
    terms
}

pub fn general_fib_term(pair: &FibPair, n: usize) -> BigInt {
    let (mut x, mut y) = (pair.a.clone(), pair.b.clone());
    for _ in 0..n {
        let next = &x + &y;
        x = core::mem::replace(&mut y, next);
    }
    x
}

/// `S^i F(a, b)_n` by direct iterated summation.
pub fn s_i_fib_term(pair: &FibPair, i: usize, n: usize) -> BigInt {
    derived_terms(pair, i, n + 1)
        .pop()
        .expect("n + 1 terms were generated")
}

/// Exact `C(n, k)`; zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    // After step j the accumulator is C(n - k + j, j), so each division is exact.
    (1..=k).fold(BigUint::one(), |acc, j| acc * (n - k + j) / j)
}

fn binomial_int(n: u64, k: i64) -> BigInt {
    BigInt::from(binomial(n, k))
}

/// Right-hand side of
/// `S^i F(a,b)_n = S^{i-1} F(a,b)_{n+2} - C(n+i, i-2)·a - C(n+i, i-1)·b`,
/// with `C(·, -1) = 0`.
///
/// # Panics
///
/// If `i == 0`.
pub fn closed_form_rhs(pair: &FibPair, i: usize, n: usize) -> BigInt {
    assert!(i >= 1, "the closed form needs at least one summation");
    let top = (n + i) as u64;
    let ii = i as i64;
    s_i_fib_term(pair, i - 1, n + 2)
        - binomial_int(top, ii - 2) * &pair.a
        - binomial_int(top, ii - 1) * &pair.b
}

/// The explicit polynomial forms for the first few levels (`1 <= i <= 4`),
/// written without binomial notation. `None` for other levels.
pub fn low_order_closed_form(pair: &FibPair, i: usize, n: usize) -> Option<BigInt> {
    let (a, b) = (&pair.a, &pair.b);
    let k = BigInt::from(n);
    let prev = |level| s_i_fib_term(pair, level, n + 2);
    let value = match i {
        1 => prev(0) - b,
        2 => prev(1) - a - (&k + 2) * b,
        3 => prev(2) - (&k + 3) * a - (&k + 2) * (&k + 3) / 2 * b,
        4 => {
            prev(3)
                - (&k + 3) * (&k + 4) / 2 * a
                - (&k + 2) * (&k + 3) * (&k + 4) / 6 * b
        }
        _ => return None,
    };
    Some(value)
}

/// `S^{j-1} F(a, b)_1 = (j - 1)·a + b` for `j >= 1`.
pub fn s_level_at_one(pair: &FibPair, j: usize) -> BigInt {
    assert!(j >= 1, "level index starts at 1");
    BigInt::from(j - 1) * &pair.a + &pair.b
}

/// Evaluates both hockey-stick sums used by the closed form's induction step:
///
/// * `j + Σ_{k=0}^{n} C(k+j, j-2) = C(n+j+1, j-1)`
/// * `1 + Σ_{k=0}^{n} C(k+j, j-1) = C(n+j+1, j)`
pub fn pascal_sum_identities(j: u64, n: u64) -> (bool, bool) {
    let jj = j as i64;
    let mut first = BigUint::from(j);
    let mut second = BigUint::one();
    for k in 0..=n {
        first += binomial(k + j, jj - 2);
        second += binomial(k + j, jj - 1);
    }
    (
        first == binomial(n + j + 1, jj - 1),
        second == binomial(n + j + 1, jj),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PisanoRecord {
    pub m: Modulus,
    pub pi: u64,
    /// Whether `pi == 6·m`.
    pub ratio_times_6m: bool,
}

/// The Pisano period `π(m)`.
pub fn pisano(m: Modulus) -> PisanoRecord {
    let pi = minimal_period(&SequenceSpec::fibonacci(m))
        .expect("Fibonacci recurrence is purely periodic");
    PisanoRecord {
        m,
        pi,
        ratio_times_6m: pi == 6 * m.get(),
    }
}

/// Minimal period of the Lucas sequence modulo `m`.
pub fn lucas_period(m: Modulus) -> u64 {
    minimal_period(&SequenceSpec::lucas(m)).expect("Lucas recurrence is purely periodic")
}

/// Outcome of checking `π(m) <= 6m` and `Π(L, m) <= 4m` on `2..=m_max`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FreydBrownScan {
    pub m_max: u64,
    pub fibonacci_equalities: Vec<u64>,
    pub fibonacci_violations: Vec<u64>,
    pub lucas_equalities: Vec<u64>,
    pub lucas_violations: Vec<u64>,
}

impl FreydBrownScan {
    /// `{2·5^k : k >= 1} ∩ [2, m_max]`.
    pub fn expected_fibonacci_equalities(m_max: u64) -> Vec<u64> {
        core::iter::successors(Some(10u64), |&x| x.checked_mul(5))
            .take_while(|&x| x <= m_max)
            .collect()
    }

    pub fn expected_lucas_equalities(m_max: u64) -> Vec<u64> {
        if m_max >= 6 {
            alloc::vec![6]
        } else {
            Vec::new()
        }
    }

    /// No violations and both equality sets exactly as predicted.
    pub fn holds(&self) -> bool {
        self.fibonacci_violations.is_empty()
            && self.lucas_violations.is_empty()
            && self.fibonacci_equalities == Self::expected_fibonacci_equalities(self.m_max)
            && self.lucas_equalities == Self::expected_lucas_equalities(self.m_max)
    }
}

pub fn freyd_brown_scan(m_max: Modulus) -> FreydBrownScan {
    let mut scan = FreydBrownScan {
        m_max: m_max.get(),
        ..Default::default()
    };
    for m in 2..=m_max.get() {
        let modulus = Modulus::new(m).expect("2 <= m <= m_max");
        let pi = pisano(modulus).pi;
        if pi > 6 * m {
            scan.fibonacci_violations.push(m);
        } else if pi == 6 * m {
            scan.fibonacci_equalities.push(m);
        }
        let lucas = lucas_period(modulus);
        if lucas > 4 * m {
            scan.lucas_violations.push(m);
        } else if lucas == 4 * m {
            scan.lucas_equalities.push(m);
        }
    }
    scan
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(x: u64) -> Modulus {
        Modulus::new(x).unwrap()
    }

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn fib_terms_examples() {
        assert_eq!(general_fib_term(&FibPair::fibonacci(), 12), big(144));
        assert_eq!(general_fib_term(&FibPair::new(-4, 9), 0), big(-4));
        assert_eq!(general_fib_term(&FibPair::lucas(), 6), big(18));
        assert_eq!(
            general_fib_term(&FibPair::fibonacci(), 100),
            "354224848179261915075".parse::<BigInt>().unwrap()
        );
    }

    #[test]
    fn s_i_examples() {
        assert_eq!(s_i_fib_term(&FibPair::fibonacci(), 1, 10), big(143));
        assert_eq!(s_i_fib_term(&FibPair::new(1, 0), 2, 0), big(1));
        for n in 0..20 {
            assert_eq!(
                s_i_fib_term(&FibPair::new(3, -7), 0, n),
                general_fib_term(&FibPair::new(3, -7), n)
            );
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_rhs(&FibPair::fibonacci(), 1, 5), big(12));
        for pair in [FibPair::new(1, 0), FibPair::new(0, 1)] {
            assert_eq!(closed_form_rhs(&pair, 2, 0), pair.a);
        }
        let f = FibPair::fibonacci();
        assert_eq!(closed_form_rhs(&f, 4, 3), s_i_fib_term(&f, 4, 3));
    }

    #[test]
    #[should_panic(expected = "at least one summation")]
    fn closed_form_rejects_level_zero() {
        closed_form_rhs(&FibPair::fibonacci(), 0, 3);
    }

    #[test]
    fn level_at_one_examples() {
        assert_eq!(s_level_at_one(&FibPair::new(5, 8), 1), big(8));
        assert_eq!(s_level_at_one(&FibPair::new(1, 0), 5), big(4));
        assert_eq!(s_level_at_one(&FibPair::new(2, 7), 3), big(11));
        assert_eq!(s_i_fib_term(&FibPair::new(2, 7), 2, 1), big(11));
    }

    #[test]
    fn exact_binomials() {
        assert_eq!(binomial(5, -1), BigUint::zero());
        assert_eq!(binomial(4, 5), BigUint::zero());
        assert_eq!(binomial(30, 15), BigUint::from(155_117_520u64));
        assert_eq!(binomial(0, 0), BigUint::one());
    }

    #[test]
    fn pascal_sum_examples() {
        assert_eq!(pascal_sum_identities(2, 0), (true, true));
        assert_eq!(pascal_sum_identities(1, 5), (true, true));
        assert_eq!(pascal_sum_identities(6, 20), (true, true));
    }

    #[test]
    fn pisano_examples() {
        assert_eq!(pisano(m(8)).pi, 12);
        assert_eq!(pisano(m(10)), PisanoRecord { m: m(10), pi: 60, ratio_times_6m: true });
        assert_eq!(pisano(m(987)).pi, 32);
        let small: Vec<u64> = (2..=8).map(|x| pisano(m(x)).pi).collect();
        assert_eq!(small, vec![3, 8, 6, 20, 24, 16, 12]);
    }

    #[test]
    fn freyd_brown_small() {
        let scan = freyd_brown_scan(m(60));
        assert_eq!(scan.fibonacci_equalities, vec![10, 50]);
        assert_eq!(scan.lucas_equalities, vec![6]);
        assert!(scan.holds());
        let scan = freyd_brown_scan(m(5));
        assert!(scan.fibonacci_equalities.is_empty());
        assert!(scan.lucas_equalities.is_empty());
        assert!(scan.holds());
    }

    #[test]
    fn reduced_pair() {
        let spec = FibPair::new(-3, 5).reduced(m(7));
        assert_eq!(spec, SequenceSpec::general_fibonacci(4, 5, m(7)));
    }
}
