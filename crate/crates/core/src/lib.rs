//! Periodic integer sequences modulo `m` and the periods of their partial
//! sums.
//!
//! The crate is `no_std` and needs only `alloc`. It covers:
//!
//! * [`residue`]: residues in `Z_m`, additive order, gcd/lcm and binomial
//!   coefficients reduced modulo `m` via Pascal's rule.
//! * [`sequence`]: finite descriptions of purely periodic sequences
//!   (linear recurrences with a unit trailing coefficient, or repeated
//!   blocks) and the partial-sum operator `S`.
//! * [`period`]: exact minimal periods, the period predictor for `S(G)`,
//!   a brute-force oracle for it, and derived-period chains for `S^i(G)`.
//! * [`fibonacci`]: exact closed forms for higher partial sums of general
//!   Fibonacci sequences, Pisano periods and the Freyd–Brown bounds.
//!
//! ```
//! use cyclemod_core::{period, sequence::SequenceSpec, Modulus};
//!
//! let m = Modulus::new(5).unwrap();
//! let g = SequenceSpec::block(&[0, 1, 1], m).unwrap();
//! let report = period::predict_sum_period(&g).unwrap();
//! assert_eq!(report.period, 3);
//! assert_eq!(report.tail_sum, 2);
//! assert_eq!(report.predicted_sum_period, 15);
//! ```
#![no_std]

extern crate alloc;

mod error;
pub mod fibonacci;
pub mod period;
pub mod residue;
pub mod sequence;

pub use error::Error;
pub use residue::{Modulus, Residue};

pub type Result<T, E = Error> = core::result::Result<T, E>;
