use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of a negative number: {0}")]
    NegativeRadicand(String),
    #[error("square root only defined here for rational arguments, got {0}")]
    IrrationalRadicand(String),
    #[error("radicand too large for the tower: {0}")]
    RadicandOverflow(String),
    #[error("matrix is singular")]
    Singular,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("cannot parse scalar `{input}`: {reason}")]
    Parse { input: String, reason: String },
}
