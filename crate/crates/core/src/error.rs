use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The group lacks the structure an operation relies on (nilpotency,
    /// a particular Sylow shape, ...).
    #[error("unsupported structure: {0}")]
    UnsupportedStructure(String),

    #[error("no external generator witness: {0}")]
    WitnessNotFound(String),

    /// A search exceeded its configured budget. `partial` holds whatever was
    /// found before the budget ran out, as sorted index lists.
    #[error("resource limit of {limit} exceeded ({} partial results)", partial.len())]
    ResourceLimit { limit: u64, partial: Vec<Vec<usize>> },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}

pub(crate) fn unsupported<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::UnsupportedStructure(msg.into()))
}
