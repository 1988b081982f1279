use thiserror::Error;

use crate::report::Report;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: unknown element `{name}`")]
    UnknownElement { line: usize, name: String },

    #[error("line {line}: duplicate operation `{name}`")]
    DuplicateOperation { line: usize, name: String },

    #[error("line {line}: duplicate element `{name}`")]
    DuplicateElement { line: usize, name: String },

    #[error("operation `{name}` is not total: {message}")]
    NonTotal { name: String, message: String },

    #[error("missing operation `{0}`")]
    MissingOperation(String),

    #[error("operation `{name}` has arity {found}, expected {expected}")]
    WrongArity {
        name: String,
        expected: usize,
        found: usize,
    },

    #[error("missing constant `{0}`")]
    MissingConstant(String),

    #[error("not a partial order: {0}")]
    NotPartialOrder(String),

    /// The structure failed one of the axioms it was asked to satisfy.
    #[error("{} validation failed: {}", .0.kind, .0.first_failure().unwrap_or("unknown"))]
    Invalid(Box<Report>),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A construction produced something a theorem rules out. This means the
    /// input was mis-validated or the toolkit is broken.
    #[error("internal theorem violation: {0}")]
    Violation(String),

    #[error("universe has {size} elements, above the enumeration bound {bound}")]
    SizeBound { size: usize, bound: usize },

    #[error(transparent)]
    Term(#[from] crate::term::TermError),
}

impl Error {
    pub(crate) fn invalid(report: Report) -> Self {
        Error::Invalid(Box::new(report))
    }

    pub(crate) fn violation(message: impl Into<String>) -> Self {
        Error::Violation(message.into())
    }
}
