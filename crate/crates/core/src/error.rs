use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid Frobenius coordinates: {0}")]
    InvalidFrobenius(String),

    #[error("partition {partition} is not admissible for m = {m}")]
    NotAdmissible { partition: String, m: usize },

    #[error("cannot halve determinant: coefficient {0} is odd")]
    OddCoefficient(String),

    #[error("division is not exact: {0}")]
    InexactDivision(String),

    #[error("pair ({lambda} | {mu}) is singular")]
    SingularPair { lambda: String, mu: String },

    #[error("matrix must be square, got {rows} rows and a row of length {cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("degree {degree} exceeds truncation {max}")]
    DegreeOverflow { degree: usize, max: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
