//! Finite-dimensional real Lie algebras with invariant scalar products.
//!
//! Structure constants are exact [`Scalar`](exactnum::Scalar)s. Vectors are
//! coefficient vectors in the algebra's basis; forms live in the dual basis.

mod algebra;
mod cw;
mod d6;
mod error;
mod extension;
mod forms;
mod spectrum;

pub use algebra::{LieAlgebra, MetricLieAlgebra};
pub use cw::{cw_algebra, cw_brackets, cw_canonicalize, CwAlgebra, CwCanonical, CwData};
pub use d6::{
    algebra_by_id, anti_selfdual_filter, d6_catalog, d_e4, e15, is_anti_selfdual, nw6, so12, so12_so3, so3, D6Case,
    D6Entry,
};
pub use error::LieError;
pub use extension::{b_removal_map, d2n2, double_extension, normalize_skew_eigenvalues, skew_blocks, skew_eigenvalues};
pub use forms::{biinvariant_ricci, canonical_three_form, ce_differential};
pub use spectrum::{characteristic_polynomial, round_spectrum, symmetric_eigenvalues, Spectrum};
