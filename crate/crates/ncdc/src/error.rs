use thiserror::Error;

/// Errors raised by constructors, the parser, and the mirror operation.
#[derive(Debug, Error)]
pub enum Error {
    /// A structural invariant was violated while building a presentation,
    /// bimodule, calculus or pair.
    #[error("{0}")]
    Shape(String),

    /// The model file or an expression argument failed to parse.
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    /// The opposite presentation cannot be expressed in the rule class.
    #[error("mirror rejected: {0}")]
    Mirror(String),

    /// A downstream constructor refused an invalid presentation.
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
