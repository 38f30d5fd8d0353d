use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("value {value} at ({x}, {y}) is outside 1..={n}")]
    OutOfRange {
        x: usize,
        y: usize,
        value: usize,
        n: usize,
    },

    #[error("not a partial order: {0}")]
    NotPartialOrder(String),

    #[error("not a total order: {0}")]
    NotTotalOrder(String),

    #[error("not a semilattice: {0}")]
    NotSemilattice(String),

    #[error("Hasse diagram is not a binary tree")]
    NotBinaryTree,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("operation is not associative")]
    NotAssociative,

    #[error("re-extending the reduced binary operation does not give back the k-ary table")]
    ReductionMismatch,

    #[error("{what}: n = {n} exceeds the bound {max}")]
    BoundExceeded {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("{0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
