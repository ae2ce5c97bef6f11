use std::time::Duration;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("unsupported graph order {order} (limit {limit})")]
    UnsupportedOrder { order: usize, limit: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("graph must be connected")]
    Disconnected,

    #[error("search budget of {budget:?} exhausted (best bounds: {lower}..={upper})")]
    Timeout {
        budget: Duration,
        lower: usize,
        upper: usize,
    },

    #[error("{0}")]
    Io(String),

    #[error("config error on line {line}: {reason}")]
    Config { line: usize, reason: String },
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
