use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is out of range (expected 2 <= m <= 2^31)")]
    ModulusOutOfRange(u64),
    #[error("residues belong to different moduli ({0} and {1})")]
    ModulusMismatch(u64, u64),
    #[error("arithmetic overflow")]
    Overflow,
    #[error("block must contain at least one residue")]
    EmptyBlock,
    #[error("recurrence must have at least one coefficient")]
    EmptyRecurrence,
    #[error("recurrence has {coefficients} coefficients but {initial} initial values")]
    InitialLengthMismatch { coefficients: usize, initial: usize },
    #[error("trailing coefficient {coefficient} is not a unit modulo {modulus}")]
    NonUnitTrailingCoefficient { coefficient: u64, modulus: u64 },
    #[error("no period found within {cap} steps")]
    PeriodCapExceeded { cap: u64 },
    #[error("level {level} has period {period}, above the cap of {cap} terms")]
    LevelCapExceeded { level: usize, period: u64, cap: u64 },
}
