use thiserror::Error;

/// Errors raised by the algebra kernel and the classification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("residues carry mixed moduli: expected Z/{expected}, found Z/{found}")]
    MixedModuli { expected: String, found: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("orbit reduction needs at least 2 coordinates, got {0}")]
    TooFewCoordinates(usize),

    #[error("matrix is not in row echelon form")]
    NotEchelon,

    #[error("elements live in different groups: {0} vs {1}")]
    GroupMismatch(String, String),

    #[error("missing table entry {0}")]
    MissingTable(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid space: {0}")]
    InvalidSpace(String),

    #[error("invalid connected sum: {0}")]
    InvalidSpec(String),

    #[error("table load error: {0}")]
    TableLoad(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
