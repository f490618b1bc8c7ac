//! Crate-wide error type.

use crate::rational::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("coefficient {0} lies outside [0, 1]")]
    CoefficientOutOfRange(Rational),

    #[error("invalid boundary: {0}")]
    InvalidBoundary(String),

    #[error("registry incomplete: N_{0} unknown (supply it explicitly for dimensions >= 2)")]
    RegistryIncomplete(u32),

    #[error("dimension must be at least {0}")]
    DimensionTooSmall(u32),

    #[error("dimension {0} exceeds the enumeration guard ({1})")]
    DimensionTooLarge(u32, u32),

    #[error("boundary degree {degree} exceeds {bound}: -(K+D) is not nef")]
    NotNef { degree: Rational, bound: Rational },

    #[error("no complement up to cap {0}")]
    NoComplementUpTo(u64),

    #[error("coefficient {0} is not standard (not of the form 1 - 1/m)")]
    NonStandardCoefficient(Rational),

    #[error("closure check is defined for the standard set and its interval extensions only")]
    UnsupportedCoefficientSet,

    #[error("coefficient {0} does not lie in the required set")]
    NotInSet(Rational),

    #[error("invalid different input: {0}")]
    InvalidDifferent(String),

    #[error("need at least {0} points")]
    TooFewPoints(u32),

    #[error("different coefficient {0} exceeds 1: pair is not lc along the divisor")]
    NotLcAlongDivisor(Rational),

    #[error("invalid dual graph: {0}")]
    InvalidGraph(String),

    #[error("intersection matrix is not negative definite")]
    NotNegativeDefinite,

    #[error("branch at {0} is not negative definite")]
    BranchNotNegativeDefinite(String),

    #[error("not DuVal: discrepancy of {vertex} is {value}, expected 0")]
    NotDuVal { vertex: String, value: Rational },

    #[error("unknown vertex id {0:?}")]
    UnknownVertex(String),

    #[error("parameter {0} lies outside [0, 1]")]
    ParameterOutOfRange(Rational),

    #[error("invalid threshold table: {0}")]
    InvalidTable(String),

    #[error("F misses all divisors: every row has multF = 0")]
    NoDivisorMeetsF,
}
