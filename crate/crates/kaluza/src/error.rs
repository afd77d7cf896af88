use exactnum::NumError;
use liealg::LieError;
use multilinear::FormError;
use sugra::SugraError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum KaluzaError {
    #[error("reduction direction is not spacelike: |X|^2 = {0}")]
    NotSpacelike(String),
    #[error("connection form does not satisfy alpha(xi) = 1: alpha(xi) = {0}")]
    BadConnection(String),
    #[error("direction has {found} components, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Sugra(#[from] SugraError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Form(#[from] FormError),
    #[error(transparent)]
    Num(#[from] NumError),
}
