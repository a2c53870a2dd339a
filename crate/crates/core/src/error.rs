use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("coordinate {index} is outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("operation requires a boolean-valued function")]
    Kind,

    #[error("query budget of {budget} exhausted")]
    Budget { budget: u64 },

    /// The precondition of prefix search does not hold (`f(x_A) = 1` or `f(x_{A∪S}) = 0`).
    #[error("search precondition violated: {0}")]
    Search(&'static str),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("function is not monotone")]
    NotMonotone,

    #[error("no size-{k} subset certifies the input ({queries} queries issued)")]
    Exhausted { k: usize, queries: u64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Dimension { .. }
            | Error::IndexOutOfRange { .. }
            | Error::Kind
            | Error::Contract(_)
            | Error::NotMonotone
            | Error::Parse(_) => 2,
            Error::Verification(_) => 3,
            Error::Capacity(_) => 4,
            Error::Io(_) => 5,
            Error::Budget { .. } | Error::Search(_) | Error::Exhausted { .. } => 1,
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Parse(err.to_string())
    }
}
