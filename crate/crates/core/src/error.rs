use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field modulus {0}: must be a prime <= 251")]
    InvalidField(u32),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),

    #[error("coring mismatch: {0}")]
    CoringMismatch(String),

    /// A hypothesis required by a construction does not hold.
    #[error("{0}")]
    Hypothesis(String),

    #[error("module is not rational: element {element:?} lies outside Rat")]
    NotRational { element: Vec<u32> },

    /// A formula that should descend to a quotient does not.
    #[error("ill-defined: {0}")]
    IllDefined(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown name `{0}`")]
    UnknownName(String),

    /// A computation that theory guarantees to succeed did not.
    #[error("consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn dims(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }

    pub(crate) fn hypothesis(msg: impl Into<String>) -> Self {
        Error::Hypothesis(msg.into())
    }

    pub(crate) fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }
}
