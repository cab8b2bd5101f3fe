use thiserror::Error;

/// Errors raised by the algebra engine.
///
/// Usage errors (bad levels, malformed representations, parse failures) map
/// to CLI exit code 2; invariant violations map to exit code 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("level mismatch: {0}")]
    LevelMismatch(String),

    #[error("level out of range: {0}")]
    LevelOutOfRange(String),

    #[error("malformed representation: {0}")]
    MalformedRep(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("degree-inhomogeneous operands: {0}")]
    Inhomogeneous(String),

    #[error("non-±-isotypic Weyl module encountered at level {level} ({other} dimensions outside the ±1 eigenspaces)")]
    NonSignIsotypic { level: usize, other: u64 },

    #[error("invalid eigendata: {0}")]
    InvalidEigendata(String),

    #[error("tuple decoding is not unique at degree {degree}: {count} distinct tuples")]
    TupleCollision { degree: String, count: usize },

    #[error("invalid Weyl action: {0}")]
    InvalidWeylAction(String),

    #[error("unknown space: {0}")]
    UnknownSpace(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for errors caused by bad input rather than a failed invariant.
    pub fn is_usage(&self) -> bool {
        !matches!(
            self,
            Error::NonSignIsotypic { .. } | Error::TupleCollision { .. } | Error::InvalidWeylAction(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
