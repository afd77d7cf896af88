use std::fmt::Debug;

use crate::{NumError, Scalar};

/// Commutative coefficient ring shared by forms, tensors and spinor
/// endomorphisms. Implemented by [`Scalar`], [`crate::Polynomial`] and
/// [`crate::Complex`].
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn from_scalar(s: Scalar) -> Self;
    fn scale(&self, s: &Scalar) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_scalar(Scalar::from(n))
    }
}

/// A [`Coeff`] in which every nonzero element is invertible.
pub trait Field: Coeff {
    fn inverse(&self) -> Result<Self, NumError>;
}
