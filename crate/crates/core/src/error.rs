use thiserror::Error;

/// Errors raised by the algebraic and geometric routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("not a square over Q: {0}")]
    NotASquare(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("determinant vanishes identically; use the nilpotent decomposition")]
    ZeroDeterminant,
    #[error("determinant {0} is not constant; not a special tensor")]
    NotSpecialTensor(String),
    #[error("determinant {0} does not vanish identically")]
    NonzeroDeterminant(String),
    #[error("pullback is not regular: ({0})/x is not a polynomial")]
    NonRegular(String),
    #[error("chart tensor is not the pullback of a tensor on the base: {0}")]
    NotPulledBack(String),
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
