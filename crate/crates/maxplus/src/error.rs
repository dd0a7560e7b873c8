use thiserror::Error;

/// Library-wide error type. Variants map one-to-one onto the CLI's
/// distinct exit-code classes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("operation requires finite entries, found -inf at row {row}, column {col}")]
    NotFinite { row: usize, col: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("enumeration budget exceeded: needs {needed} candidates, budget is {budget}")]
    Budget { needed: u128, budget: u128 },

    #[error("unsupported instance: no exact method applies within budget")]
    UnsupportedInstance,

    #[error("{0}")]
    Parse(#[from] crate::io::ParseError),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn shape(msg: impl Into<String>) -> Error {
        Error::Shape(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Error {
        Error::Precondition(msg.into())
    }
}
