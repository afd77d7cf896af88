//! Tensor calculus on polynomial coordinate charts and on products of
//! constant-curvature blocks.
//!
//! Sign conventions, used throughout:
//!
//! | quantity | definition |
//! |---|---|
//! | curvature operator | `R(X,Y) = ∇_X∇_Y − ∇_Y∇_X − ∇_{[X,Y]}` |
//! | Riemann tensor | `R(a,b,c,d) = g(R(e_a,e_b)e_c, e_d)` |
//! | Ricci | `Ric(b,c) = g^{ad} R(a,b,c,d)` |
//! | round sphere | `R = K·½ g⊙g`, `K > 0` |
//! | torsion | `g(T(X,Y),Z) = H(X,Y,Z)`, `D = ∇ + ½T` |

mod curvature;
mod error;
mod frame;
mod patch;
mod product;
mod torsion;

pub use curvature::{
    christoffel, covariant_derivative, exterior_derivative, killing_operator, metric_compatibility_defect, ricci,
    ricci_from, riemann, riemann_from, scalar_curvature_from, Christoffel,
};
pub use error::GeometryError;
pub use frame::{change_basis, Coframe};
pub use patch::{eval, CoordinatePatch};
pub use product::{curvature_operators, product_riemann, ConstCurvBlock, Factor, ProductGeometry};
pub use torsion::{
    curvature_with_torsion, flat_torsion_consequences, flat_torsion_consequences_on_patch, group_curvature_with_torsion,
    group_riemann, solve_torsion_scale, FlatTorsionReport,
};
