use exactnum::NumError;
use multilinear::FormError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("unsupported signature ({0}, {1})")]
    UnsupportedSignature(usize, usize),
    #[error("frame metric is not built from diagonal entries and lightcone pairs")]
    UnsupportedFrame,
    #[error("frame signature {frame:?} does not match representation {rep:?}")]
    SignatureMismatch { frame: (usize, usize), rep: (usize, usize) },
    #[error("representation has no invariant pairing")]
    NoPairing,
    #[error(transparent)]
    Form(#[from] FormError),
    #[error(transparent)]
    Num(#[from] NumError),
}
