use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("division by an interval containing zero: {0}")]
    DivisionByZero(String),

    #[error("possible pole: {0}")]
    PossiblePole(String),

    #[error("lexical error at offset {offset}: {message}")]
    Lex { offset: usize, message: String },

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("corpus error in {stanza}: {message}")]
    Corpus { stanza: String, message: String },

    #[error("unknown identifier: {0}")]
    UnknownId(String),

    #[error("evaluation error at offset {offset}: {source}")]
    Eval {
        offset: usize,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
