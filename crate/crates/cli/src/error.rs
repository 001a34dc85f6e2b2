use thiserror::Error;

/// Problems with input text. Every variant carries enough position
/// information to find the offending spot.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed header: {reason}")]
    Header { line: usize, reason: String },
    #[error("line {line}: literal {literal} out of range for {num_vars} variables")]
    LiteralOutOfRange {
        line: usize,
        literal: i64,
        num_vars: usize,
    },
    #[error("line {line}: clause is not terminated by 0")]
    MissingTerminator { line: usize },
    #[error("line {line}: cannot read {token:?} as a literal")]
    BadToken { line: usize, token: String },
    #[error("line {line}: empty clause")]
    EmptyClause { line: usize },
    #[error("line {line}: header announced {expected} clauses, found {found}")]
    ClauseCount {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("{path}: {message}")]
    Document { path: String, message: String },
}

impl ParseError {
    pub(crate) fn doc(path: impl Into<String>, message: impl ToString) -> Self {
        ParseError::Document {
            path: path.into(),
            message: message.to_string(),
        }
    }
}
