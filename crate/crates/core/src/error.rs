use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("bases are not complementary: {0}")]
    Decomposition(String),
    #[error("not closed under bracket and operator: {0}")]
    Closure(String),
    #[error("projection is not a retraction onto the subalgebra: {0}")]
    InvalidProjection(String),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("malformed document: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn shape_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Shape(msg.into()))
}
