//! Exact arithmetic over the rationals extended by square roots of positive
//! integers, plus sparse multivariate polynomials over that field.
//!
//! Division uses conjugate rationalization: every nonzero [`Scalar`] is
//! invertible, because the tower is a field (`Q(√p₁, …, √p_m)`).

mod coeff;
mod complex;
mod error;
pub mod linalg;
mod poly;
mod roots;
mod scalar;

pub use coeff::{Coeff, Field};
pub use complex::Complex;
pub use error::NumError;
pub use poly::Polynomial;
pub use roots::common_real_roots;
pub use scalar::Scalar;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
