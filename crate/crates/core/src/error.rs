use num_bigint::BigUint;
use thiserror::Error;

/// Errors raised by the tower and bound computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("residue {value} is out of range for modulus {modulus}")]
    ResidueOutOfRange { value: BigUint, modulus: BigUint },

    #[error("generator {0} is not invertible")]
    NotInvertible(String),

    #[error("level mismatch: expected p^n = {expected}, found {found}")]
    LevelMismatch { expected: BigUint, found: BigUint },

    #[error("level n = 0 has no kernel subgroup B")]
    LevelZero,

    #[error("enumeration of {required} elements exceeds the budget of {limit}")]
    BudgetExceeded { required: BigUint, limit: u64 },

    #[error("enumeration requires p^n to fit in 64 bits, got {0}")]
    ModulusTooLarge(BigUint),

    #[error("the acting group is non-abelian; the induced-irrep construction needs abelian H")]
    NonAbelian,

    #[error("inconsistent field degrees: {0}")]
    InconsistentDegrees(String),

    #[error("field degrees cover levels 0..={covered}, level {requested} requested")]
    DegreesTooShort { covered: u32, requested: u32 },

    #[error("hypothesis not asserted: {0}")]
    HypothesisNotAsserted(Hypothesis),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Hypotheses that gate the rank bounds. They are never verified, only asserted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    /// The Galois action on `H_1(X, F_p)` is trivial.
    TrivialH1Action,
    /// The cyclotomic Z_p-extension has vanishing mu-invariant.
    MuZero,
}

impl std::fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Hypothesis::TrivialH1Action => f.write_str("trivial Galois action on H_1(X, F_p)"),
            Hypothesis::MuZero => f.write_str("mu-invariant zero"),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
