use exactnum::NumError;
use multilinear::FormError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LieError {
    #[error("bracket is not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(usize, usize),
    #[error("Jacobi identity fails on basis triple {0:?}")]
    Jacobi([usize; 3]),
    #[error("scalar product is not invariant on basis triple {0:?}")]
    NotInvariant([usize; 3]),
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("derivation is not skew for the scalar product at ({0}, {1})")]
    NotSkew(usize, usize),
    #[error("map is not a derivation of the bracket on ({0}, {1})")]
    NotDerivation(usize, usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("skew eigenvalue is zero; the action is degenerate")]
    DegenerateAction,
    #[error("unknown algebra identifier `{0}`")]
    UnknownId(String),
    #[error(transparent)]
    Form(#[from] FormError),
    #[error(transparent)]
    Num(#[from] NumError),
}
