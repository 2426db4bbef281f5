//! Verification sweeps that pit the period formulas and closed forms
//! against brute force. Each sweep reports the first counterexample found,
//! in a deterministic order.

use std::fmt;
use std::str::FromStr;

use cyclemod_core::fibonacci::{
    closed_form_rhs, freyd_brown_scan, low_order_closed_form, pascal_sum_identities,
    s_i_fib_term, FibPair,
};
use cyclemod_core::period::{
    derived_chain_capped, detected_sum_period, minimal_period, predict_sum_period,
    zero_tail_equivalence, DEFAULT_LEVEL_CAP,
};
use cyclemod_core::sequence::SequenceSpec;
use cyclemod_core::Modulus;
use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::{fuzz_corpus, DEFAULT_SEED};
use crate::spec_json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Predicted partial-sum period equals the brute-force period.
    SumPeriod,
    /// Zero tail sum iff the partial sums keep the period.
    ZeroTail,
    /// Closed form for `S^i F(a, b)_n` over the integers.
    ClosedForm,
    /// Hockey-stick binomial sums.
    Pascal,
    /// One period of `F(a, b)` sums to zero and `S(F)` keeps the period.
    PeriodSum,
    /// `π(m) <= 6m` and `Π(L, m) <= 4m` with the known equality sets.
    FreydBrown,
    /// Derived chains re-measured level by level.
    Chain,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::SumPeriod,
        Suite::ZeroTail,
        Suite::ClosedForm,
        Suite::Pascal,
        Suite::PeriodSum,
        Suite::FreydBrown,
        Suite::Chain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::SumPeriod => "sum-period",
            Suite::ZeroTail => "zero-tail",
            Suite::ClosedForm => "closed-form",
            Suite::Pascal => "pascal",
            Suite::PeriodSum => "period-sum",
            Suite::FreydBrown => "freyd-brown",
            Suite::Chain => "chain",
        }
    }

    fn default_max_m(self) -> u64 {
        match self {
            Suite::SumPeriod | Suite::ZeroTail => 60,
            Suite::PeriodSum => 30,
            Suite::FreydBrown => 2000,
            Suite::Chain => 12,
            Suite::ClosedForm | Suite::Pascal => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownSuite(pub String);

impl fmt::Display for UnknownSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown suite `{}`", self.0)
    }
}

impl std::error::Error for UnknownSuite {}

/// Parses a suite name. The literature-style names (`theorem-3-5`,
/// `corollary-3-3`, `identities`, `lemma-2-6`) are accepted as aliases.
impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, UnknownSuite> {
        Ok(match s {
            "sum-period" | "theorem-3-5" => Suite::SumPeriod,
            "zero-tail" | "corollary-3-3" => Suite::ZeroTail,
            "closed-form" | "identities" | "theorem-4-2" => Suite::ClosedForm,
            "pascal" => Suite::Pascal,
            "period-sum" | "lemma-2-6" => Suite::PeriodSum,
            "freyd-brown" => Suite::FreydBrown,
            "chain" | "theorem-4-4" => Suite::Chain,
            other => return Err(UnknownSuite(other.to_owned())),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Number of random specs for the corpus-driven suites.
    pub cases: usize,
    pub seed: u64,
    /// Overrides the suite's default modulus bound.
    pub max_m: Option<u64>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            cases: 10_000,
            seed: DEFAULT_SEED,
            max_m: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: u64,
    pub passed: bool,
    pub summary: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl SuiteReport {
    fn from_checks(suite: Suite, checks: Vec<Result<(), String>>, summary: String) -> Self {
        let cases = checks.len() as u64;
        let counterexample = checks.into_iter().find_map(Result::err);
        SuiteReport {
            suite: suite.name().to_owned(),
            cases,
            passed: counterexample.is_none(),
            summary,
            counterexample,
        }
    }
}

/// Runs one suite on the current rayon pool.
pub fn run(suite: Suite, opts: &VerifyOptions) -> SuiteReport {
    let max_m = opts.max_m.unwrap_or(suite.default_max_m());
    match suite {
        Suite::SumPeriod => {
            let checks = fuzz_corpus(opts.seed, opts.cases, max_m)
                .par_iter()
                .map(check_sum_period)
                .collect();
            let summary = format!("{} random specs, m <= {max_m}", opts.cases);
            SuiteReport::from_checks(suite, checks, summary)
        }
        Suite::ZeroTail => {
            let checks = fuzz_corpus(opts.seed, opts.cases, max_m)
                .par_iter()
                .map(check_zero_tail)
                .collect();
            let summary = format!("{} random specs, m <= {max_m}", opts.cases);
            SuiteReport::from_checks(suite, checks, summary)
        }
        Suite::ClosedForm => closed_form_suite(),
        Suite::Pascal => {
            let checks = (1..=12u64)
                .flat_map(|j| (0..=50u64).map(move |n| (j, n)))
                .collect::<Vec<_>>()
                .into_par_iter()
                .map(|(j, n)| match pascal_sum_identities(j, n) {
                    (true, true) => Ok(()),
                    sides => Err(format!("j={j} n={n}: identities evaluate to {sides:?}")),
                })
                .collect();
            SuiteReport::from_checks(suite, checks, "1 <= j <= 12, 0 <= n <= 50".to_owned())
        }
        Suite::PeriodSum => {
            let checks = (2..=max_m.max(1))
                .flat_map(|m| (0..m).flat_map(move |a| (0..m).map(move |b| (m, a, b))))
                .collect::<Vec<_>>()
                .into_par_iter()
                .map(|(m, a, b)| check_period_sum(m, a as i64, b as i64))
                .collect();
            let summary = format!("all F(a,b) mod m for m <= {max_m}");
            SuiteReport::from_checks(suite, checks, summary)
        }
        Suite::FreydBrown => freyd_brown_suite(max_m),
        Suite::Chain => {
            let checks = (2..=max_m.max(1))
                .flat_map(|m| (0..3).map(move |which| (m, which)))
                .collect::<Vec<_>>()
                .into_par_iter()
                .map(|(m, which)| {
                    let modulus = Modulus::new(m).map_err(|e| e.to_string())?;
                    let spec = match which {
                        0 => SequenceSpec::fibonacci(modulus),
                        1 => SequenceSpec::lucas(modulus),
                        _ => SequenceSpec::block(&[0, 1, 1], modulus).expect("non-empty"),
                    };
                    check_chain(&spec, 4)
                })
                .collect();
            let summary = format!("Fibonacci, Lucas and block 011 to depth 4, m <= {max_m}");
            SuiteReport::from_checks(suite, checks, summary)
        }
    }
}

pub fn run_all(opts: &VerifyOptions) -> Vec<SuiteReport> {
    Suite::ALL.iter().map(|&s| run(s, opts)).collect()
}

pub fn check_sum_period(spec: &SequenceSpec) -> Result<(), String> {
    let describe = || spec_json::to_json(spec);
    let report = predict_sum_period(spec).map_err(|e| format!("{}: {e}", describe()))?;
    let detected = detected_sum_period(spec).map_err(|e| format!("{}: {e}", describe()))?;
    if report.predicted_sum_period == detected {
        Ok(())
    } else {
        Err(format!(
            "{}: predicted {} but detected {}",
            describe(),
            report.predicted_sum_period,
            detected
        ))
    }
}

pub fn check_zero_tail(spec: &SequenceSpec) -> Result<(), String> {
    let check = zero_tail_equivalence(spec).map_err(|e| e.to_string())?;
    if check.holds() {
        Ok(())
    } else {
        Err(format!(
            "{}: tail_sum_zero={} but periods_equal={}",
            spec_json::to_json(spec),
            check.tail_sum_zero,
            check.periods_equal
        ))
    }
}

/// One period of `F(a, b) mod m` sums to zero, and `S(F)` has the same period.
pub fn check_period_sum(m: u64, a: i64, b: i64) -> Result<(), String> {
    let modulus = Modulus::new(m).map_err(|e| e.to_string())?;
    let spec = SequenceSpec::general_fibonacci(a, b, modulus);
    let p = minimal_period(&spec).map_err(|e| e.to_string())?;
    let tail = spec.prefix(p as usize).iter().fold(0, |acc, x| (acc + x) % m);
    if tail != 0 {
        return Err(format!("F({a},{b}) mod {m}: one period sums to {tail}"));
    }
    let sum_period = detected_sum_period(&spec).map_err(|e| e.to_string())?;
    if sum_period != p {
        return Err(format!(
            "F({a},{b}) mod {m}: period {p} but partial sums have period {sum_period}"
        ));
    }
    Ok(())
}

/// Every consecutive pair of levels obeys `p_{i+1} = s_i · p_i`, and the
/// brute-force oracle measures the same `p_{i+1}`.
pub fn check_chain(spec: &SequenceSpec, depth: usize) -> Result<(), String> {
    let describe = || spec_json::to_json(spec);
    let (chain, levels) = derived_chain_capped(spec, depth, DEFAULT_LEVEL_CAP)
        .map_err(|e| format!("{}: {e}", describe()))?;
    for (i, w) in chain.levels.windows(2).enumerate() {
        let predicted = w[0].multiplier * w[0].period;
        let detected = detected_sum_period(&levels[i].spec).map_err(|e| e.to_string())?;
        if w[1].period != predicted || detected != predicted {
            return Err(format!(
                "{}: level {} period {} (predicted {predicted}, detected {detected})",
                describe(),
                i + 1,
                w[1].period
            ));
        }
    }
    Ok(())
}

pub const IDENTITY_PAIRS: [(i64, i64); 5] = [(0, 1), (2, 1), (1, 0), (-3, 5), (7, -2)];

fn closed_form_suite() -> SuiteReport {
    let mut cases = Vec::new();
    for (a, b) in IDENTITY_PAIRS {
        for i in 1..=6usize {
            for n in 0..=60usize {
                cases.push((a, b, i, n, false));
            }
        }
        for i in 2..=4usize {
            for n in 0..=40usize {
                cases.push((a, b, i, n, true));
            }
        }
    }
    let checks = cases
        .into_par_iter()
        .map(|(a, b, i, n, low_order)| {
            let pair = FibPair::new(a, b);
            let rhs = closed_form_rhs(&pair, i, n);
            let lhs = if low_order {
                low_order_closed_form(&pair, i, n).ok_or_else(|| format!("no low-order form for i={i}"))?
            } else {
                s_i_fib_term(&pair, i, n)
            };
            if lhs == rhs {
                Ok(())
            } else {
                let what = if low_order { "low-order form" } else { "direct sum" };
                Err(format!("F({a},{b}) i={i} n={n}: {what} {lhs} != closed form {rhs}"))
            }
        })
        .collect();
    SuiteReport::from_checks(
        Suite::ClosedForm,
        checks,
        "i <= 6, n <= 60 and low-order forms i = 2..4, n <= 40, five (a,b) pairs".to_owned(),
    )
}

fn freyd_brown_suite(max_m: u64) -> SuiteReport {
    let modulus = match Modulus::new(max_m) {
        Ok(m) => m,
        Err(e) => {
            return SuiteReport {
                suite: Suite::FreydBrown.name().to_owned(),
                cases: 0,
                passed: false,
                summary: String::new(),
                counterexample: Some(e.to_string()),
            }
        }
    };
    let scan = freyd_brown_scan(modulus);
    let summary = format!(
        "m <= {max_m}: pi(m) = 6m at {:?}; Lucas period = 4m at {:?}",
        scan.fibonacci_equalities, scan.lucas_equalities
    );
    let counterexample = if scan.holds() {
        None
    } else if let Some(m) = scan.fibonacci_violations.first() {
        Some(format!("pi({m}) > 6·{m}"))
    } else if let Some(m) = scan.lucas_violations.first() {
        Some(format!("Lucas period mod {m} exceeds 4·{m}"))
    } else {
        Some(format!(
            "equality sets {:?} / {:?} differ from expected {:?} / {:?}",
            scan.fibonacci_equalities,
            scan.lucas_equalities,
            cyclemod_core::fibonacci::FreydBrownScan::expected_fibonacci_equalities(max_m),
            cyclemod_core::fibonacci::FreydBrownScan::expected_lucas_equalities(max_m),
        ))
    };
    SuiteReport {
        suite: Suite::FreydBrown.name().to_owned(),
        cases: max_m.saturating_sub(1),
        passed: counterexample.is_none(),
        summary,
        counterexample,
    }
}
