use thiserror::Error;

/// Errors produced by construction, validation, and numeric operations.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("non-finite input: {0}")]
    NonFinite(&'static str),
    #[error("invalid fuzzy number: {0}")]
    InvalidFuzzyNumber(String),
    #[error("alpha level {0} outside [0, 1]")]
    AlphaOutOfRange(f64),
    #[error("divergent integral: integrand does not vanish in the tails")]
    DivergentIntegral,
    #[error("empty candidate list")]
    EmptyCandidates,
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),
    #[error("invalid state space: {0}")]
    InvalidStateSpace(String),
    #[error("invalid experiment: {0}")]
    InvalidExperiment(String),
    #[error("observation variant does not match experiment variant")]
    VariantMismatch,
    #[error("zero marginal: observation has probability 0 under every positive-prior state")]
    ZeroMarginal,
    #[error("malformed region: {0}")]
    MalformedRegion(String),
    #[error("invalid decision problem: {0}")]
    InvalidProblem(String),
    #[error("scale factor must be positive, got {0}")]
    NonPositiveScale(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
