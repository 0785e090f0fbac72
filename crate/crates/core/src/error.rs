use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a unit: series has zero constant term")]
    NotAUnit,
    #[error("inner series must have zero constant term")]
    NonZeroConstant,
    #[error("not invertible as formal series")]
    NotInvertible,
    #[error("oracle limit exceeded: {steps} steps requested, at most {limit} supported")]
    OracleLimitExceeded { steps: usize, limit: usize },
    #[error("closed forms require the balanced probabilities")]
    UnbalancedProbabilities,
    #[error("invalid probability {0}: need 0 < p < 1")]
    InvalidProbability(String),
    #[error("probability {0} does not fit the 64-bit sampling threshold")]
    UnsupportedProbability(String),
    #[error("trials must be at least 1")]
    NoTrials,
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
