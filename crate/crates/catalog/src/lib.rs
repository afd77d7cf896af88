//! The catalogue of parallelisable type II backgrounds built from
//! group-manifold factors, and the tooling to verify backgrounds from
//! the command line.

pub mod commands;
mod dilaton;
mod error;
pub mod expr;
mod factors;
mod file;
mod products;
mod report;
mod resolve;
mod susy;
mod tables;

pub use dilaton::{ads_sphere_balance, flux_sign, solve_dilaton, Balance, DilatonOutcome, DilatonSpec, FluxSign};
pub use error::CatalogError;
pub use factors::{elementary_factors, realization, su3, DilatonFreedom, ElementaryFactor, FactorKind, TorsionClass};
pub use file::{load_background, parse_background};
pub use products::{enumerate_parallelisable, GeometryProduct};
pub use report::{CwReport, Envelope, OUT_OF_SCOPE};
pub use resolve::{builtin_ids, resolve_builtin, Overrides, Perturbation, BUILTIN_PARAMS};
pub use sugra::builtins::builtin_backgrounds;
pub use susy::{realize, susy_count, DilatonChoice, SusyCount, FRAME_CONSTANT_SECTOR};
pub use tables::{
    compute_tables, render_dilatons, render_factors, render_geometries, render_supersymmetry, render_tables, CountCell,
    DilatonRow, RejectedRow, SusyRow, Tables, FRAME_CONSTANT_FOOTNOTE,
};
