use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An engine was asked to handle an input beyond its enumeration bound.
    #[error("{engine} limit exceeded: {what} is {actual}, limit is {limit}")]
    SizeLimitExceeded {
        engine: &'static str,
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("invalid probability triple: {0}")]
    InvalidProbabilities(String),
    #[error("invalid attachment sequence: {0}")]
    InvalidSequence(String),
    #[error("cannot parse {0:?} as an exact rational")]
    ParseRational(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("denominator is constant, there is no pole")]
    DegenerateDenominator,
    #[error("denominator of degree {0} is not supported (expected 1 or 2)")]
    UnsupportedDegree(usize),
    #[error("denominator has no real root")]
    NoRealRoot,
    #[error("denominator roots have equal modulus, no unique dominant pole")]
    NoDominantRoot,
}

impl Error {
    /// Errors caused by malformed caller input rather than by a computation.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::InvalidProbabilities(_)
                | Error::InvalidSequence(_)
                | Error::ParseRational(_)
                | Error::InvalidArgument(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
