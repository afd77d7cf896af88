use clifford::CliffordError;
use exactnum::NumError;
use geometry::GeometryError;
use liealg::LieError;
use multilinear::FormError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SugraError {
    #[error("background `{id}` is a {found} background, expected {expected}")]
    WrongTheory { id: String, expected: String, found: String },
    #[error("missing flux `{0}`")]
    MissingFlux(String),
    #[error("flux `{name}` has degree {found}, expected {expected}")]
    FluxDegree { name: String, expected: usize, found: usize },
    #[error("five-form flux is not self-dual: {0}")]
    NotSelfDual(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Form(#[from] FormError),
    #[error(transparent)]
    Num(#[from] NumError),
}
