use liealg::LieError;
use sugra::SugraError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("{0}")]
    NotAGroup(String),
    #[error("`{0}` is not a type II background")]
    NotABackground(String),
    #[error("`{0}` admits no constant dilaton")]
    NoConstantDilaton(String),
    #[error("unknown geometry `{0}`")]
    UnknownGeometry(String),
    #[error("unknown background `{0}`")]
    UnknownBackground(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Sugra(#[from] SugraError),
    #[error(transparent)]
    Kaluza(#[from] kaluza::KaluzaError),
    #[error(transparent)]
    Num(#[from] exactnum::NumError),
}
