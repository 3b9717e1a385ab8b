use thiserror::Error;

/// Errors raised by the exact algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivideByZero,
    #[error("denominator vanishes at the specialization point")]
    PoleAtSpecialization,
    #[error("cannot specialize q to zero")]
    ZeroSpecialization,
    #[error("node ({row},{col},{pos}) is not in the shape")]
    NodeOutsideShape { row: usize, col: usize, pos: usize },
    #[error("tableau is not standard")]
    NotStandard,
    #[error("not a content array: condition ({condition}) fails at entry {entry}")]
    NotContentArray { condition: u8, entry: usize },
    #[error("index out of range: {0}")]
    BadIndex(String),
    #[error("ambient mismatch: ({0},{1}) vs ({2},{3})")]
    AmbientMismatch(usize, usize, usize, usize),
    #[error("representation of an empty shape")]
    EmptyShape,
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
