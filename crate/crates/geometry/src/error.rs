use exactnum::NumError;
use liealg::LieError;
use multilinear::FormError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("metric is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("metric has no polynomial inverse (no constant pivot in column {0})")]
    NoPolynomialInverse(usize),
    #[error("torsion form is not closed; dH has component {component} at {indices:?}")]
    NotClosed { indices: Vec<usize>, component: String },
    #[error("coframe does not reproduce the metric at ({0}, {1})")]
    FrameNotOrthonormal(usize, usize),
    #[error("unknown coordinate `{0}`")]
    UnknownCoordinate(String),
    #[error("constant-curvature block of dimension {dim} with scalar curvature {curvature} is invalid")]
    BadBlock { dim: usize, curvature: String },
    #[error("product has {0} lorentzian blocks, expected exactly one")]
    Causality(usize),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Form(#[from] FormError),
    #[error(transparent)]
    Num(#[from] NumError),
}
