//! Finite descriptions of purely periodic sequences modulo `m` and the
//! partial-sum operator `S`.
//!
//! `S` maps `G_0, G_1, G_2, ...` to `G_0, G_0 + G_1, G_0 + G_1 + G_2, ...`.
//! Applying it `i` times gives the `i`-th derived sequence `S^i G`.

use alloc::vec::Vec;

use crate::period::{self, DEFAULT_LEVEL_CAP};
use crate::residue::{gcd, Modulus};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    /// `x_n = c_1·x_{n-1} + ... + c_k·x_{n-k}`, with `coefficients = [c_1, ..., c_k]`
    /// and `initial = [x_0, ..., x_{k-1}]`.
    Recurrence {
        coefficients: Vec<u64>,
        initial: Vec<u64>,
    },
    /// The block repeated forever.
    Block(Vec<u64>),
}

/// A purely periodic sequence modulo `m`.
///
/// All stored values are reduced into `[0, m)`. Recurrences must have a
/// trailing coefficient that is a unit modulo `m`, which rules out
/// pre-periods. Blocks are kept exactly as given; they are not shortened
/// to their minimal period.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SequenceSpec {
    modulus: Modulus,
    kind: SequenceKind,
}

impl SequenceSpec {
    pub fn recurrence(coefficients: &[i64], initial: &[i64], modulus: Modulus) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::EmptyRecurrence);
        }
        if coefficients.len() != initial.len() {
            return Err(Error::InitialLengthMismatch {
                coefficients: coefficients.len(),
                initial: initial.len(),
            });
        }
        let coefficients: Vec<u64> = coefficients
            .iter()
            .map(|&c| modulus.reduce_signed(c))
            .collect();
        let trailing = coefficients[coefficients.len() - 1];
        if gcd(trailing, modulus.get()) != 1 {
            return Err(Error::NonUnitTrailingCoefficient {
                coefficient: trailing,
                modulus: modulus.get(),
            });
        }
        let initial = initial.iter().map(|&x| modulus.reduce_signed(x)).collect();
        Ok(SequenceSpec {
            modulus,
            kind: SequenceKind::Recurrence {
                coefficients,
                initial,
            },
        })
    }

    /// `F(a, b)`: `x_0 = a`, `x_1 = b`, `x_n = x_{n-1} + x_{n-2}`.
    ///
    /// `F(0, 1)` is the Fibonacci sequence and `F(2, 1)` the Lucas sequence.
    pub fn general_fibonacci(a: i64, b: i64, modulus: Modulus) -> Self {
        SequenceSpec {
            modulus,
            kind: SequenceKind::Recurrence {
                coefficients: alloc::vec![1 % modulus.get(), 1 % modulus.get()],
                initial: alloc::vec![modulus.reduce_signed(a), modulus.reduce_signed(b)],
            },
        }
    }

    pub fn fibonacci(modulus: Modulus) -> Self {
        Self::general_fibonacci(0, 1, modulus)
    }

    pub fn lucas(modulus: Modulus) -> Self {
        Self::general_fibonacci(2, 1, modulus)
    }

    /// A repeated block; entries are reduced modulo `m`.
    pub fn block(residues: &[i64], modulus: Modulus) -> Result<Self> {
        if residues.is_empty() {
            return Err(Error::EmptyBlock);
        }
        Ok(SequenceSpec {
            modulus,
            kind: SequenceKind::Block(
                residues.iter().map(|&x| modulus.reduce_signed(x)).collect(),
            ),
        })
    }

    /// Like [`SequenceSpec::block`] for values that are already reduced.
    pub(crate) fn reduced_block(residues: Vec<u64>, modulus: Modulus) -> Self {
        debug_assert!(!residues.is_empty());
        debug_assert!(residues.iter().all(|&x| x < modulus.get()));
        SequenceSpec {
            modulus,
            kind: SequenceKind::Block(residues),
        }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn kind(&self) -> &SequenceKind {
        &self.kind
    }

    pub fn as_block(&self) -> Option<&[u64]> {
        match &self.kind {
            SequenceKind::Block(b) => Some(b),
            SequenceKind::Recurrence { .. } => None,
        }
    }

    pub fn terms(&self) -> Terms<'_> {
        let state = match &self.kind {
            SequenceKind::Block(_) => TermsState::Block { pos: 0 },
            SequenceKind::Recurrence { initial, .. } => TermsState::Recurrence {
                window: initial.clone(),
                head: 0,
            },
        };
        Terms { spec: self, state }
    }

    /// The first `n` terms `x_0, ..., x_{n-1}`.
    pub fn prefix(&self, n: usize) -> Vec<u64> {
        self.terms().take(n).collect()
    }

    /// Running sums `SG_0, SG_1, ...` computed lazily from the terms.
    pub fn running_sums(&self) -> RunningSums<'_> {
        RunningSums {
            terms: self.terms(),
            acc: 0,
            modulus: self.modulus,
        }
    }
}

/// Infinite iterator over the terms of a [`SequenceSpec`].
#[derive(Debug, Clone)]
pub struct Terms<'a> {
    spec: &'a SequenceSpec,
    state: TermsState,
}

#[derive(Debug, Clone)]
enum TermsState {
    Block { pos: usize },
    // Ring buffer holding x_n..x_{n+k-1}; x_n sits at `head`.
    Recurrence { window: Vec<u64>, head: usize },
}

impl Iterator for Terms<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let m = self.spec.modulus;
        match (&mut self.state, &self.spec.kind) {
            (TermsState::Block { pos }, SequenceKind::Block(block)) => {
                let x = block[*pos];
                *pos += 1;
                if *pos == block.len() {
                    *pos = 0;
                }
                Some(x)
            }
            (TermsState::Recurrence { window, head }, SequenceKind::Recurrence { coefficients, .. }) => {
                let k = window.len();
                let x = window[*head];
                // x_{n+k} = sum_j c_j · x_{n+k-j}
                let mut next = 0;
                for (j, &c) in coefficients.iter().enumerate() {
                    let idx = (*head + k - 1 - j) % k;
                    next = m.add(next, m.mul(c, window[idx]));
                }
                window[*head] = next;
                *head = (*head + 1) % k;
                Some(x)
            }
            _ => unreachable!("iterator state does not match sequence kind"),
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (usize::MAX, None)
    }
}

impl Terms<'_> {
    /// True when the next `k` terms equal the first `k` terms, i.e. the
    /// generator is back in its starting state. Blocks count positions.
    pub(crate) fn at_start(&self) -> bool {
        match (&self.state, &self.spec.kind) {
            (TermsState::Block { pos }, _) => *pos == 0,
            (TermsState::Recurrence { window, head }, SequenceKind::Recurrence { initial, .. }) => {
                let k = window.len();
                (0..k).all(|i| window[(*head + i) % k] == initial[i])
            }
            _ => unreachable!("iterator state does not match sequence kind"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunningSums<'a> {
    terms: Terms<'a>,
    acc: u64,
    modulus: Modulus,
}

impl Iterator for RunningSums<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let x = self.terms.next()?;
        self.acc = self.modulus.add(self.acc, x);
        Some(self.acc)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (usize::MAX, None)
    }
}

/// A sequence obtained from a base sequence by `level` applications of `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationLevel {
    pub level: usize,
    pub spec: SequenceSpec,
}

/// `S(G)` as an explicit block of one full minimal period.
pub fn partial_sum(spec: &SequenceSpec) -> Result<SequenceSpec> {
    partial_sum_capped(spec, DEFAULT_LEVEL_CAP)
}

/// [`partial_sum`] that refuses to materialize more than `cap` terms.
pub fn partial_sum_capped(spec: &SequenceSpec, cap: u64) -> Result<SequenceSpec> {
    realize_partial_sum(spec, 1, cap)
}

fn realize_partial_sum(spec: &SequenceSpec, level: usize, cap: u64) -> Result<SequenceSpec> {
    let len = period::predict_sum_period(spec)?.predicted_sum_period;
    sum_block(spec, len, level, cap)
}

/// Materializes `len` running sums of `spec` as a block, or fails if `len`
/// exceeds `cap`.
pub(crate) fn sum_block(spec: &SequenceSpec, len: u64, level: usize, cap: u64) -> Result<SequenceSpec> {
    if len > cap {
        return Err(Error::LevelCapExceeded {
            level,
            period: len,
            cap,
        });
    }
    let block = spec.running_sums().take(len as usize).collect();
    Ok(SequenceSpec::reduced_block(block, spec.modulus()))
}

/// Levels `0..=depth` of `S^i(spec)`; level 0 is `spec` itself.
pub fn derive(spec: &SequenceSpec, depth: usize) -> Result<Vec<DerivationLevel>> {
    derive_capped(spec, depth, DEFAULT_LEVEL_CAP)
}

pub fn derive_capped(spec: &SequenceSpec, depth: usize, cap: u64) -> Result<Vec<DerivationLevel>> {
    let mut levels = Vec::with_capacity(depth + 1);
    levels.push(DerivationLevel {
        level: 0,
        spec: spec.clone(),
    });
    for level in 1..=depth {
        let next = realize_partial_sum(&levels[level - 1].spec, level, cap)?;
        levels.push(DerivationLevel { level, spec: next });
    }
    Ok(levels)
}
