use exactnum::NumError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("dimension {0} exceeds the supported maximum of 13")]
    DimensionTooLarge(usize),
    #[error("metric is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("metric is degenerate")]
    Degenerate,
    #[error("metric determinant {0} has no square root in the tower")]
    IrrationalVolume(String),
    #[error("orientation must be +1 or -1, got {0}")]
    BadOrientation(i32),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("operation needs degree {expected}, got {found}")]
    WrongDegree { expected: String, found: usize },
    #[error(transparent)]
    Num(#[from] NumError),
}
