use thiserror::Error;

use crate::trace::TraceError;

pub type Result<T> = std::result::Result<T, Error>;

/// Domain errors raised by the algorithms.
///
/// The variant name is part of the CLI contract: it is what gets printed on
/// stderr when a run fails for a mathematical (rather than usage) reason.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator must be non-zero")]
    ZeroDenominator,
    #[error("inputs must be strictly positive")]
    NonPositiveInput,
    #[error("generator pair must satisfy m > n >= 1")]
    InvalidGenerators,
    #[error("exponent must be non-negative")]
    NegativeExponent,
    #[error("pattern length {0} is outside the enumerable range 0..={1}")]
    LengthOutOfRange(String, u32),
    #[error("row index {0} is outside 1..=2^{1}")]
    IndexOutOfRange(String, String),
    #[error("cadence must be non-negative")]
    NegativeCadence,
    #[error("cadence {0} is outside the enumerable range 0..={1}")]
    CadenceOutOfRange(String, u32),
    #[error("row index must be non-negative")]
    NegativeRow,
    #[error("each player must still need at least one win")]
    InvalidWins,
    #[error("radicand must be non-negative")]
    NegativeRadicand,
    #[error("base must be at least 2")]
    InvalidBase,
    #[error("division by zero")]
    ZeroDivisor,
    #[error("gcd {g} does not divide {c}")]
    NotSolvable { g: String, c: String },
    #[error("a and b are both zero")]
    DegenerateInput,
    #[error("{0} is a perfect square")]
    PerfectSquare(String),
    #[error("N must be at least 2")]
    InvalidModulus,
    #[error("value must lie strictly between 0 and 1")]
    OutOfRange,
    #[error("{0} is not a prime")]
    NotPrimeInput(String),
    #[error("prime list must be non-empty and free of duplicates")]
    InvalidPrimeList,
    #[error(transparent)]
    Trace(#[from] TraceError),
}

impl Error {
    /// Stable identifier of the error kind.
    pub fn name(&self) -> &'static str {
        match self {
            Error::ZeroDenominator => "ZeroDenominator",
            Error::NonPositiveInput => "NonPositiveInput",
            Error::InvalidGenerators => "InvalidGenerators",
            Error::NegativeExponent => "NegativeExponent",
            Error::LengthOutOfRange(..) => "LengthOutOfRange",
            Error::IndexOutOfRange(..) => "IndexOutOfRange",
            Error::NegativeCadence => "NegativeCadence",
            Error::CadenceOutOfRange(..) => "CadenceOutOfRange",
            Error::NegativeRow => "NegativeRow",
            Error::InvalidWins => "InvalidWins",
            Error::NegativeRadicand => "NegativeRadicand",
            Error::InvalidBase => "InvalidBase",
            Error::ZeroDivisor => "ZeroDivisor",
            Error::NotSolvable { .. } => "NotSolvable",
            Error::DegenerateInput => "DegenerateInput",
            Error::PerfectSquare(_) => "PerfectSquare",
            Error::InvalidModulus => "InvalidModulus",
            Error::OutOfRange => "OutOfRange",
            Error::NotPrimeInput(_) => "NotPrimeInput",
            Error::InvalidPrimeList => "InvalidPrimeList",
            Error::Trace(e) => e.name(),
        }
    }
}
