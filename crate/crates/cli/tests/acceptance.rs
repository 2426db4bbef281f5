//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails. All checks are exact.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cyclemod::corpus::{fuzz_corpus, DEFAULT_SEED};
use cyclemod::verify::{check_period_sum, check_sum_period, check_zero_tail, IDENTITY_PAIRS};
use cyclemod_core::fibonacci::{
    closed_form_rhs, freyd_brown_scan, low_order_closed_form, pascal_sum_identities, pisano,
    s_i_fib_term, FibPair,
};
use cyclemod_core::period::{derived_chain_capped, detected_sum_period, predict_sum_period};
use cyclemod_core::sequence::SequenceSpec;
use cyclemod_core::Modulus;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const FUZZ_CASES: usize = 10_000;
const FUZZ_MAX_M: u64 = 60;
const PISANO_SCAN_BUDGET: Duration = Duration::from_secs(10);

fn m(x: u64) -> Modulus {
    Modulus::new(x).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn both_sum_periods(spec: &SequenceSpec) -> Result<(u64, u64), String> {
    let predicted = predict_sum_period(spec).map_err(|e| e.to_string())?.predicted_sum_period;
    let detected = detected_sum_period(spec).map_err(|e| e.to_string())?;
    Ok((predicted, detected))
}

fn intro_table() -> Outcome {
    let expected = [3, 9, 6, 15, 9, 21, 12];
    for (modulus, &want) in (2..=8).zip(&expected) {
        let g = SequenceSpec::block(&[0, 1, 1], m(modulus)).unwrap();
        let (predicted, detected) = both_sum_periods(&g)?;
        ensure(predicted == want && detected == want, || {
            format!("m={modulus}: predicted {predicted}, detected {detected}, expected {want}")
        })?;
    }
    Ok(format!("{expected:?}"))
}

fn date_block() -> Outcome {
    for (modulus, want) in [(15, 24), (30, 48), (36, 288)] {
        let g = SequenceSpec::block(&[2, 0, 1, 9, 0, 8, 2, 3], m(modulus)).unwrap();
        let (predicted, detected) = both_sum_periods(&g)?;
        ensure(predicted == want && detected == want, || {
            format!("m={modulus}: predicted {predicted}, detected {detected}, expected {want}")
        })?;
    }
    Ok("24, 48, 288".into())
}

fn pisano_spot_values() -> Outcome {
    let small: Vec<u64> = (2..=8).map(|x| pisano(m(x)).pi).collect();
    ensure(small == [3, 8, 6, 20, 24, 16, 12], || format!("m=2..8 gave {small:?}"))?;
    let spots = [
        (10, 60),
        (25, 100),
        (98, 336),
        (250, 1500),
        (500, 1500),
        (625, 2500),
        (750, 3000),
        (987, 32),
        (1250, 7500),
        (1991, 90),
        (2000, 3000),
        (2001, 336),
    ];
    for (modulus, want) in spots {
        let got = pisano(m(modulus)).pi;
        ensure(got == want, || format!("pi({modulus}) = {got}, expected {want}"))?;
    }
    let start = Instant::now();
    let table: Vec<u64> = (2..=2001).map(|x| pisano(m(x)).pi).collect();
    let elapsed = start.elapsed();
    ensure(table.len() == 2000, || "scan incomplete".into())?;
    ensure(elapsed < PISANO_SCAN_BUDGET, || format!("scan to 2001 took {elapsed:?}"))?;
    Ok(format!("{} spot values, scan 2..=2001 in {elapsed:.2?}", spots.len() + 7))
}

fn freyd_brown() -> Outcome {
    let scan = freyd_brown_scan(m(2000));
    ensure(scan.fibonacci_violations.is_empty(), || {
        format!("pi(m) > 6m at {:?}", scan.fibonacci_violations)
    })?;
    ensure(scan.fibonacci_equalities == [10, 50, 250, 1250], || {
        format!("pi(m) = 6m at {:?}", scan.fibonacci_equalities)
    })?;
    let lucas_eq: Vec<u64> = scan.lucas_equalities.iter().copied().filter(|&x| x <= 500).collect();
    let lucas_bad: Vec<u64> = scan.lucas_violations.iter().copied().filter(|&x| x <= 500).collect();
    ensure(lucas_bad.is_empty(), || format!("Lucas period > 4m at {lucas_bad:?}"))?;
    ensure(lucas_eq == [6], || format!("Lucas period = 4m at {lucas_eq:?}"))?;
    Ok("6m equality at [10, 50, 250, 1250]; 4m equality at [6]".into())
}

fn digits(block: &[u64]) -> String {
    block.iter().map(|d| d.to_string()).collect()
}

fn derived_blocks() -> Outcome {
    let cases: [(u64, usize, &[&str]); 2] = [
        (2, 4, &["011", "010", "011100", "010111101000", "011010110000"]),
        (
            3,
            3,
            &[
                "01120221",
                "01211020",
                "010122111212002220201100",
                "011210120202221022112000",
            ],
        ),
    ];
    let mut periods = Vec::new();
    for (modulus, depth, printed) in cases {
        let f = SequenceSpec::fibonacci(m(modulus));
        let (chain, levels) = derived_chain_capped(&f, depth, 1_000_000).map_err(|e| e.to_string())?;
        for (i, want) in printed.iter().enumerate() {
            let level = chain.levels[i].period;
            let block = digits(&levels[i].spec.prefix(level as usize));
            ensure(block == *want, || format!("mod {modulus} level {i}: {block} != {want}"))?;
            ensure(level as usize == want.len(), || format!("mod {modulus} level {i}: period {level}"))?;
        }
        periods.push(chain.periods());
    }
    ensure(periods[0] == [3, 3, 6, 12, 12], || format!("{:?}", periods[0]))?;
    ensure(periods[1] == [8, 8, 24, 24], || format!("{:?}", periods[1]))?;
    Ok(format!("{:?} and {:?}", periods[0], periods[1]))
}

fn fuzz_sum_periods() -> Outcome {
    let corpus = fuzz_corpus(DEFAULT_SEED, FUZZ_CASES, FUZZ_MAX_M);
    ensure(corpus.len() >= 10_000, || format!("only {} cases", corpus.len()))?;
    for spec in &corpus {
        check_sum_period(spec)?;
    }
    Ok(format!("{} cases, m <= {FUZZ_MAX_M}", corpus.len()))
}

fn closed_forms() -> Outcome {
    let mut checked = 0;
    for (a, b) in IDENTITY_PAIRS {
        let pair = FibPair::new(a, b);
        for i in 1..=6 {
            for n in 0..=60 {
                let lhs = s_i_fib_term(&pair, i, n);
                let rhs = closed_form_rhs(&pair, i, n);
                ensure(lhs == rhs, || format!("F({a},{b}) i={i} n={n}: {lhs} != {rhs}"))?;
                checked += 1;
            }
        }
        for i in 2..=4 {
            for n in 0..=40 {
                let poly = low_order_closed_form(&pair, i, n);
                let binom = closed_form_rhs(&pair, i, n);
                ensure(poly.as_ref() == Some(&binom), || {
                    format!("F({a},{b}) i={i} n={n}: polynomial {poly:?} != binomial {binom}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} exact comparisons"))
}

fn one_period_sums() -> Outcome {
    let mut checked = 0;
    for modulus in 2..=30u64 {
        for a in 0..modulus as i64 {
            for b in 0..modulus as i64 {
                check_period_sum(modulus, a, b)?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} pairs (a, b), m <= 30"))
}

fn pascal_sums() -> Outcome {
    for j in 1..=12 {
        for n in 0..=50 {
            let sides = pascal_sum_identities(j, n);
            ensure(sides == (true, true), || format!("j={j} n={n}: {sides:?}"))?;
        }
    }
    Ok("1 <= j <= 12, 0 <= n <= 50".into())
}

fn zero_tail_biconditional() -> Outcome {
    let corpus = fuzz_corpus(DEFAULT_SEED, FUZZ_CASES, FUZZ_MAX_M);
    for spec in &corpus {
        check_zero_tail(spec)?;
    }
    Ok(format!("{} cases", corpus.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("block 011 partial-sum periods, m = 2..8", intro_table),
        ("block 20190823 partial-sum periods, m = 15, 30, 36", date_block),
        ("Pisano spot values and scan to 2001", pisano_spot_values),
        ("Freyd-Brown bounds and equality sets", freyd_brown),
        ("derived Fibonacci blocks mod 2 and mod 3", derived_blocks),
        ("predicted = detected partial-sum period on random corpus", fuzz_sum_periods),
        ("closed form for S^i F(a,b) over the integers", closed_forms),
        ("F(a,b) one-period sum and S(F) period, m <= 30", one_period_sums),
        ("hockey-stick binomial identities", pascal_sums),
        ("zero tail sum iff equal periods on random corpus", zero_tail_biconditional),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS [{:>2}] {name}: {detail} ({elapsed:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{:>2}] {name}: {why} ({elapsed:.2?})", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
