//! Reduction of backgrounds along a spacelike Killing vector: invariant
//! forms split as `F = G − α∧H`, group manifolds reduce at the Lie-algebra
//! level and flat eleven-dimensional space reduces along translations.

mod error;
mod flat;
mod form;
mod group;
mod reduce;
mod sample;
mod witness;

pub use error::KaluzaError;
pub use flat::{reduce_flat_d11, FlatReduction};
pub use form::{reduce_form, FormReduction};
pub use group::{horizontal_hodge, normalize, reduce_group, GroupReduction};
pub use reduce::{Reduction, ReductionData};
pub use sample::unit_spacelike_sample;
