//! Minimal periods, the partial-sum period predictor and its brute-force
//! oracle.
//!
//! For a purely periodic `G` with minimal period `p` modulo `m`, let
//! `t = G_0 + ... + G_{p-1} (mod m)` be the tail sum and `s` the additive
//! order of `t` in `Z_m`. Then `S(G)` has minimal period exactly `s·p`.
//! [`predict_sum_period`] evaluates that formula; [`detected_sum_period`]
//! measures the period of `S(G)` directly and never consults the formula.

use alloc::vec::Vec;

use crate::residue::{additive_order, Modulus, Residue};
use crate::sequence::{self, DerivationLevel, SequenceKind, SequenceSpec};
use crate::{Error, Result};

/// Default limit on the number of terms materialized for one derived level.
pub const DEFAULT_LEVEL_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PeriodReport {
    /// Minimal period `p` of the sequence.
    pub period: u64,
    /// `SG_{p-1}`, the sum of one period, reduced modulo `m`.
    pub tail_sum: u64,
    /// Additive order of `tail_sum` in `Z_m`.
    pub order_multiplier: u64,
    /// `order_multiplier · period`, the minimal period of `S(G)`.
    pub predicted_sum_period: u64,
    pub modulus: Modulus,
}

impl PeriodReport {
    pub fn tail_sum_residue(&self) -> Residue {
        self.modulus.residue(self.tail_sum)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ChainLevel {
    pub level: usize,
    pub period: u64,
    pub tail_sum: u64,
    pub multiplier: u64,
}

/// Periods of `S^0 G, ..., S^depth G`. Consecutive levels satisfy
/// `period[i + 1] = multiplier[i] · period[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ChainReport {
    pub levels: Vec<ChainLevel>,
}

impl ChainReport {
    pub fn periods(&self) -> Vec<u64> {
        self.levels.iter().map(|l| l.period).collect()
    }
}

/// Failure function (border array): `f[i]` is the length of the longest
/// proper border of `s[..=i]`.
pub fn failure_function<T: PartialEq>(s: &[T]) -> Vec<usize> {
    let mut f = alloc::vec![0usize; s.len()];
    let mut b = 0;
    for i in 1..s.len() {
        while b > 0 && s[i] != s[b] {
            b = f[b - 1];
        }
        if s[i] == s[b] {
            b += 1;
        }
        f[i] = b;
    }
    f
}

/// The smallest `d >= 1` such that `s[i] == s[i + d]` wherever both exist.
/// Zero for an empty slice.
pub fn smallest_period<T: PartialEq>(s: &[T]) -> usize {
    match failure_function(s).last() {
        Some(&border) => s.len() - border,
        None => 0,
    }
}

/// Minimal period of a block repeated forever. That period divides the
/// block length, so it is `L - f(L)` when that divides `L`, else `L`.
fn block_period(block: &[u64]) -> u64 {
    let len = block.len();
    let d = smallest_period(block);
    if len.is_multiple_of(d) {
        d as u64
    } else {
        len as u64
    }
}

/// Least `p >= 1` with `x_{n+p} = x_n` for all `n`.
///
/// Recurrences step their state vector until it returns to the initial
/// one. With a unit trailing coefficient the state map is a bijection of
/// `Z_m^k`, so this happens within `m^k` steps.
pub fn minimal_period(spec: &SequenceSpec) -> Result<u64> {
    match spec.kind() {
        SequenceKind::Block(block) => Ok(block_period(block)),
        SequenceKind::Recurrence { coefficients, .. } => {
            let cap = state_space_size(spec.modulus(), coefficients.len());
            let mut terms = spec.terms();
            let mut steps = 0u64;
            loop {
                terms.next();
                steps += 1;
                if terms.at_start() {
                    return Ok(steps);
                }
                if steps >= cap {
                    return Err(Error::PeriodCapExceeded { cap });
                }
            }
        }
    }
}

fn state_space_size(m: Modulus, k: usize) -> u64 {
    u32::try_from(k)
        .ok()
        .and_then(|k| m.get().checked_pow(k))
        .unwrap_or(u64::MAX)
}

fn period_report(spec: &SequenceSpec, period: u64) -> Result<PeriodReport> {
    let m = spec.modulus();
    let tail_sum = spec
        .terms()
        .take(period as usize)
        .fold(0, |acc, x| m.reduce(acc + x));
    let order_multiplier = additive_order(m.residue(tail_sum));
    let predicted_sum_period = order_multiplier
        .checked_mul(period)
        .ok_or(Error::Overflow)?;
    Ok(PeriodReport {
        period,
        tail_sum,
        order_multiplier,
        predicted_sum_period,
        modulus: m,
    })
}

/// Minimal period of `S(spec)` from the order-of-tail-sum formula.
pub fn predict_sum_period(spec: &SequenceSpec) -> Result<PeriodReport> {
    period_report(spec, minimal_period(spec)?)
}

/// Minimal period of `S(spec)` measured directly.
///
/// Takes `2·m·L` running sums, where `L` bounds the period of `spec` (the
/// block length for blocks, the recurrence period otherwise), and returns
/// the smallest period of that finite prefix. The period of `S(spec)` is
/// at most `m·L`, so the prefix holds two full repetitions and its
/// smallest period is the true one.
pub fn detected_sum_period(spec: &SequenceSpec) -> Result<u64> {
    let bound = match spec.kind() {
        SequenceKind::Block(block) => block.len() as u64,
        SequenceKind::Recurrence { .. } => minimal_period(spec)?,
    };
    let len = bound
        .checked_mul(2 * spec.modulus().get())
        .ok_or(Error::Overflow)?;
    let prefix: Vec<u64> = spec.running_sums().take(len as usize).collect();
    Ok(smallest_period(&prefix) as u64)
}

/// Both sides of "the tail sum is zero iff `S(G)` and `G` share a period",
/// evaluated independently of each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroTailCheck {
    pub tail_sum_zero: bool,
    pub periods_equal: bool,
}

impl ZeroTailCheck {
    pub fn holds(&self) -> bool {
        self.tail_sum_zero == self.periods_equal
    }
}

pub fn zero_tail_equivalence(spec: &SequenceSpec) -> Result<ZeroTailCheck> {
    let m = spec.modulus();
    let p = minimal_period(spec)?;
    let tail = spec
        .terms()
        .take(p as usize)
        .fold(0, |acc, x| m.reduce(acc + x));
    Ok(ZeroTailCheck {
        tail_sum_zero: tail == 0,
        periods_equal: detected_sum_period(spec)? == p,
    })
}

/// Period reports for `S^0 G ..= S^depth G` with the default level cap.
pub fn derived_chain(spec: &SequenceSpec, depth: usize) -> Result<ChainReport> {
    derived_chain_capped(spec, depth, DEFAULT_LEVEL_CAP).map(|(report, _)| report)
}

/// Like [`derived_chain`], also returning each level realized as a block
/// (level 0 is the base spec). Fails with [`Error::LevelCapExceeded`] when
/// a level `>= 1` would need more than `cap` terms.
pub fn derived_chain_capped(
    spec: &SequenceSpec,
    depth: usize,
    cap: u64,
) -> Result<(ChainReport, Vec<DerivationLevel>)> {
    let mut levels = Vec::with_capacity(depth + 1);
    let mut report = ChainReport {
        levels: Vec::with_capacity(depth + 1),
    };
    let mut current = spec.clone();
    for level in 0..=depth {
        let period = if level == 0 {
            minimal_period(&current)?
        } else {
            // Realized blocks are exactly one minimal period long.
            current.as_block().map_or(0, |b| b.len() as u64)
        };
        let r = period_report(&current, period)?;
        report.levels.push(ChainLevel {
            level,
            period: r.period,
            tail_sum: r.tail_sum,
            multiplier: r.order_multiplier,
        });
        let next = if level < depth {
            Some(sequence::sum_block(
                &current,
                r.predicted_sum_period,
                level + 1,
                cap,
            )?)
        } else {
            None
        };
        levels.push(DerivationLevel {
            level,
            spec: current,
        });
        match next {
            Some(n) => current = n,
            None => break,
        }
    }
    Ok((report, levels))
}
