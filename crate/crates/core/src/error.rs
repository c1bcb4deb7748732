use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different variable contexts")]
    ContextMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("not exactly divisible: {0}")]
    NotDivisible(String),
    #[error("a denominator vanishes identically under the substitution")]
    DenominatorVanishes,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("no leading term: {0}")]
    NoLeadingTerm(String),
    #[error("syntax error at line {line}, column {col}: {message}")]
    Syntax { line: usize, col: usize, message: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
