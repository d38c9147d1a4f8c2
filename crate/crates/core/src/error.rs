use thiserror::Error;

/// Broad classification used by callers that have to turn an error into an
/// exit code or a skip/fail decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// The input violated a documented precondition.
    Domain,
    /// The computation would exceed a configured resource bound.
    Resource,
    /// An internal invariant failed; this is a bug, not a user error.
    Internal,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("figurate numbers are indexed from 1; index 0 is not defined")]
    FigurateIndexZero,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("not divisible: prime {prime} appears with a larger exponent in the divisor")]
    NotDivisible { prime: u64 },

    #[error("zero cannot be factored")]
    FactorZero,

    #[error("{0}")]
    Domain(&'static str),

    #[error("unsupported combination: {0}")]
    Unsupported(&'static str),

    #[error("sieve would need limit {needed} but the ceiling is {ceiling}")]
    SieveCeiling { needed: u64, ceiling: u64 },

    #[error("value has about {digits} decimal digits, over the budget of {budget}")]
    DigitBudget { digits: u64, budget: u64 },

    #[error("a cofactor does not fit in 64 bits; trial division gave up")]
    FactorTooLarge,

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::FigurateIndexZero
            | Error::NotPrime(_)
            | Error::NotDivisible { .. }
            | Error::FactorZero
            | Error::Domain(_)
            | Error::Unsupported(_) => ErrorClass::Domain,
            Error::SieveCeiling { .. } | Error::DigitBudget { .. } | Error::FactorTooLarge => {
                ErrorClass::Resource
            }
            Error::Internal(_) => ErrorClass::Internal,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
