use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ambient dimension must be positive")]
    ZeroDimension,

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },

    #[error("invalid variable list: {0}")]
    InvalidVariables(String),

    #[error("order of the zero ideal is undefined")]
    UndefinedOrder,

    #[error("weight vector entries must be non-negative")]
    NegativeWeight,

    #[error("exponent overflow")]
    Overflow,

    #[error("invalid corpus specification: {0}")]
    InvalidSpec(String),

    #[error("invalid ideal file: {0}")]
    InvalidFile(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
