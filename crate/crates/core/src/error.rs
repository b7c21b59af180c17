use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: unknown generator `{name}`")]
    UnknownGenerator { line: usize, name: String },
    #[error("invalid staircase: {0}")]
    Staircase(String),
    #[error("invalid knot complex: {0}")]
    InvalidComplex(String),
    #[error("simplification failed: {0}")]
    Simplify(String),
    #[error("inconsistent gradings around cycle {0}")]
    Grading(String),
    #[error("{0}")]
    Unbounded(String),
    #[error("idempotent mismatch: {0}")]
    Idempotent(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Whether the failure comes from bad input rather than a broken invariant.
    pub fn is_validation(&self) -> bool {
        !matches!(self, Error::Invariant(_) | Error::Grading(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
