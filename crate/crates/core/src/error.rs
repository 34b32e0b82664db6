use thiserror::Error;

/// Errors raised by parsing, metric computation, and the exhaustive oracles.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input text, invalid parameters, or violated argument preconditions.
    #[error("input error: {0}")]
    Input(String),

    /// A metric operation was handed a disconnected graph.
    #[error("graph is disconnected: vertex {0:?} is unreachable")]
    Disconnected(String),

    /// An exhaustive routine refused to run because the instance is too large.
    #[error("size limit exceeded: {what} is {actual}, limit is {limit}")]
    SizeLimit {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    /// A constructive search failed where a proven structure should exist.
    #[error("counterexample: {0}")]
    Counterexample(String),

    /// A randomized generator exhausted its retry budget.
    #[error("generation failed: {0}")]
    Generation(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn is_size_limit(&self) -> bool {
        matches!(self, Error::SizeLimit { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
