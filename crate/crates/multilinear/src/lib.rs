//! Exterior algebra over a finite-dimensional space with a constant
//! pseudo-euclidean frame metric (mostly-plus signature).
//!
//! Basis covectors are `e^0, …, e^{n-1}`; a k-form stores one coefficient per
//! strictly increasing index set, encoded as a bitmask. Coefficients are any
//! [`exactnum::Coeff`], so the same code handles constant frames and
//! polynomial coordinate dependence.

mod error;
mod form;
mod plucker;
mod space;
mod tensor;

pub use error::FormError;
pub use form::{mask_indices, KForm};
pub use plucker::{lambda_action, plucker_check, Decomposability};
pub use space::{inertia, QuadraticSpace};
pub use tensor::{kulkarni_nomizu, BiSymTensor, SymTensor};

/// Maximum supported dimension.
pub const MAX_DIM: usize = 13;
