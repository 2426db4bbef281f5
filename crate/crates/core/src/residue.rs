//! Residues in `Z_m` and the small amount of number theory the period
//! formulas need.

use alloc::vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Result};

/// A modulus `m` with `2 <= m <= 2^31`.
///
/// The upper bound keeps the sum of two residues, and the product of a
/// period by an additive order, well inside `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "u64", into = "u64"))]
pub struct Modulus(u64);

impl Modulus {
    pub const MIN: u64 = 2;
    pub const MAX: u64 = 1 << 31;

    pub fn new(m: u64) -> Result<Self> {
        if (Self::MIN..=Self::MAX).contains(&m) {
            Ok(Modulus(m))
        } else {
            Err(Error::ModulusOutOfRange(m))
        }
    }

    #[inline]
    pub const fn get(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn reduce(self, x: u64) -> u64 {
        x % self.0
    }

    /// Reduces a possibly negative integer into `[0, m)`.
    #[inline]
    pub fn reduce_signed(self, x: i64) -> u64 {
        x.rem_euclid(self.0 as i64) as u64
    }

    #[inline]
    pub fn residue(self, x: u64) -> Residue {
        Residue {
            value: self.reduce(x),
            modulus: self,
        }
    }

    #[inline]
    pub fn residue_signed(self, x: i64) -> Residue {
        Residue {
            value: self.reduce_signed(x),
            modulus: self,
        }
    }

    #[inline]
    pub fn zero(self) -> Residue {
        Residue {
            value: 0,
            modulus: self,
        }
    }

    #[inline]
    pub(crate) fn add(self, x: u64, y: u64) -> u64 {
        let s = x + y;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub(crate) fn mul(self, x: u64, y: u64) -> u64 {
        x * y % self.0
    }
}

impl TryFrom<u64> for Modulus {
    type Error = Error;

    fn try_from(m: u64) -> Result<Self> {
        Modulus::new(m)
    }
}

impl From<Modulus> for u64 {
    fn from(m: Modulus) -> u64 {
        m.0
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An element of `Z_m`, always stored reduced into `[0, m)`.
///
/// Arithmetic operators panic if the operands carry different moduli.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: Modulus,
}

impl Residue {
    #[inline]
    pub fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// `s·x` for a non-negative integer multiplier `s`.
    pub fn times(self, s: u64) -> Residue {
        let m = self.modulus.get();
        Residue {
            value: ((s % m) as u128 * self.value as u128 % m as u128) as u64,
            modulus: self.modulus,
        }
    }

    fn check(self, rhs: Residue) {
        assert_eq!(
            self.modulus, rhs.modulus,
            "residue arithmetic across different moduli"
        );
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl Add for Residue {
    type Output = Residue;

    fn add(self, rhs: Residue) -> Residue {
        self.check(rhs);
        Residue {
            value: self.modulus.add(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl Neg for Residue {
    type Output = Residue;

    fn neg(self) -> Residue {
        let value = if self.value == 0 {
            0
        } else {
            self.modulus.get() - self.value
        };
        Residue {
            value,
            modulus: self.modulus,
        }
    }
}

impl Sub for Residue {
    type Output = Residue;

    fn sub(self, rhs: Residue) -> Residue {
        self + (-rhs)
    }
}

impl Mul for Residue {
    type Output = Residue;

    fn mul(self, rhs: Residue) -> Residue {
        self.check(rhs);
        Residue {
            value: self.modulus.mul(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

/// Greatest common divisor. `gcd(0, 0)` is `0`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Least common multiple, with `lcm(0, x) = 0`.
pub fn lcm(a: u64, b: u64) -> Result<u64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    (a / gcd(a, b)).checked_mul(b).ok_or(Error::Overflow)
}

/// The smallest `s >= 1` with `s·x ≡ 0 (mod m)`, i.e. `m / gcd(x, m)`.
///
/// `order(0) = 1`. For `x != 0` this agrees with `lcm(x, m) / x`.
pub fn additive_order(x: Residue) -> u64 {
    let m = x.modulus().get();
    m / gcd(x.value(), m)
}

/// `C(n, k) mod m`, computed with Pascal's rule so no division modulo a
/// composite `m` is ever needed. Negative `k` and `k > n` give zero.
///
/// Runs in `O(n · min(k, n - k))` time and `O(min(k, n - k))` space.
pub fn binomial_mod(n: u64, k: i64, m: Modulus) -> Residue {
    if k < 0 || k as u64 > n {
        return m.zero();
    }
    let k = (k as u64).min(n - k as u64) as usize;
    // row[j] holds C(r, j) for the current row r, truncated to j <= k.
    let mut row = vec![0u64; k + 1];
    row[0] = 1 % m.get();
    for r in 1..=n {
        let top = (r as usize).min(k);
        for j in (1..=top).rev() {
            row[j] = m.add(row[j], row[j - 1]);
        }
    }
    Residue {
        value: row[k],
        modulus: m,
    }
}
