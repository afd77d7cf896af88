//! Field equations and Killing-spinor counts for supergravity backgrounds
//! with exact arithmetic.

mod background;
pub mod builtins;
mod d11;
mod d6;
mod error;
mod fields;
mod iib;
mod report;
mod spinor;
mod tensors;
mod typeii;
mod verify;

pub use background::{constant_form, BackgroundSpec, Dilaton, Geometry, Theory};
pub use d6::{nw6_chart, verify_d6, NW6_CHART_ORIENTATION};
pub use d11::{d11_riemann_formula, verify_d11, verify_d11_maxsusy};
pub use error::SugraError;
pub use iib::{iib_riemann_formula, verify_iib_maxsusy};
pub use report::{Check, Status, VerificationReport};
pub use spinor::{connection_curvature, d11_connection, iib_connection, supercovariant_flatness, Differentiable, FlatnessReport};
pub use verify::verify;
pub use typeii::{dilatino_kernel, verify_typeii_common, DilatinoCount};
pub use tensors::{flux_quartic, flux_square, holonomy_violation, lift_metric, plucker_violation};
