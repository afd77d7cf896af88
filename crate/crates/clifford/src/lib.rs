//! Real spinor representations of low-dimensional Clifford algebras built
//! from tensor strings of the 2×2 blocks `1, σ₁, σ₃, ε = [[0,1],[-1,0]]`.
//!
//! Convention: `γ_a γ_b + γ_b γ_a = 2 η_ab` with mostly-plus `η`, and forms
//! act through `c(e^{a₁} ∧ ⋯ ∧ e^{a_k}) = γ^{a₁} ⋯ γ^{a_k}` in orthonormal
//! frames (antisymmetrized products in general frames).

mod error;
mod frame;
mod kernel;
mod matrix;
mod rep;

pub use error::CliffordError;
pub use frame::FrameClifford;
pub use kernel::{kernel, Expandable, Kernel};
pub use matrix::SpinMatrix;
pub use rep::{build_gamma, CliffordRep};
