use thiserror::Error;

/// Errors raised by parsing, solving and certificate handling.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input text; `line` is 1-based (0 when the input has no lines).
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// An argument violates an operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// The brute-force search exhausted its node budget before deciding.
    #[error("search budget of {budget} nodes exhausted")]
    Budget { budget: u64 },

    /// A certificate does not satisfy the hypotheses it is claimed to meet.
    #[error("certificate error: {0}")]
    Certificate(String),

    /// A constructed object failed its own verification; indicates a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
