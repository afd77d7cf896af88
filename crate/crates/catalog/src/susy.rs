use exactnum::Scalar;
use liealg::{canonical_three_form, MetricLieAlgebra};
use serde::{Deserialize, Serialize};
use sugra::{dilatino_kernel, verify_typeii_common, BackgroundSpec, Dilaton, Geometry, Theory, VerificationReport};

use crate::dilaton::{solve_dilaton, FluxSign};
use crate::factors::{realization, FactorKind};
use crate::products::GeometryProduct;
use crate::CatalogError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DilatonChoice {
    Constant,
    Nonconstant,
}

pub const FRAME_CONSTANT_SECTOR: &str = "frame-constant sector";

/// Supersymmetries among spinors constant in the parallelising frame.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SusyCount {
    pub geometry: String,
    pub dilaton: DilatonChoice,
    pub iia: usize,
    pub iib: usize,
    pub sector: String,
    /// The type-II field equations on the concrete background.
    pub equations: VerificationReport,
}

/// Squared radii (as metric scales) making the `AdS₃`/`S³` balance come out
/// as required: saturated for a constant dilaton, `|H|² = 1` otherwise.
fn scales(g: &GeometryProduct, choice: DilatonChoice) -> (Scalar, Scalar) {
    let spheres = g.count(FactorKind::S3) as i64;
    match (g.contains(FactorKind::Ads3), choice) {
        (true, DilatonChoice::Constant) => (Scalar::ratio(1, spheres.max(1)), Scalar::one()),
        (true, DilatonChoice::Nonconstant) => (Scalar::one(), Scalar::ratio(spheres, 2)),
        _ => (Scalar::one(), Scalar::one()),
    }
}

/// The product as a direct sum of metric Lie algebras, with
/// `H(X, Y, Z) = −⟨X, [Y, Z]⟩` and a dilaton of the requested kind.
pub fn realize(g: &GeometryProduct, choice: DilatonChoice) -> Result<BackgroundSpec, CatalogError> {
    let spec = solve_dilaton(g)?
        .accepted()
        .cloned()
        .ok_or_else(|| CatalogError::NotABackground(g.name()))?;
    if choice == DilatonChoice::Constant && !spec.constant_allowed {
        return Err(CatalogError::NoConstantDilaton(g.name()));
    }
    let (ads_scale, sphere_scale) = scales(g, choice);
    let mut algebra: Option<MetricLieAlgebra> = None;
    let mut offsets = Vec::new();
    for &f in g.factors() {
        let scale = match f {
            FactorKind::Ads3 => ads_scale.clone(),
            FactorKind::S3 => sphere_scale.clone(),
            _ => Scalar::one(),
        };
        let block = realization(f, &scale)?;
        let start = algebra.as_ref().map_or(0, MetricLieAlgebra::dim);
        offsets.push((f, start));
        algebra = Some(match algebra {
            None => block,
            Some(a) => a.direct_sum(&block),
        });
    }
    let algebra = algebra.expect("products are nonempty").with_name(g.name());
    let n = algebra.dim();
    let h = canonical_three_form(&algebra)?.neg();
    let h2 = h.norm_squared(algebra.space());

    // dφ = ⟨v, ·⟩ for a vector v in the allowed directions
    let mut v = vec![Scalar::zero(); n];
    if choice == DilatonChoice::Nonconstant {
        let line = offsets.iter().find(|(f, _)| *f == FactorKind::Line).map(|(_, i)| *i);
        if spec.spacelike_term {
            let y = line.ok_or_else(|| CatalogError::Unsupported("spacelike dilaton without a flat line".into()))?;
            v[y] = &h2.sqrt()? * &Scalar::ratio(1, 2);
        }
        if spec.null_term {
            match offsets[0] {
                // e₊ spans the center of the CW factor
                (FactorKind::Cw(_), start) => v[start] = Scalar::one(),
                (FactorKind::TimeLine, t) => {
                    let y = line.ok_or_else(|| CatalogError::Unsupported("null dilaton without a flat line".into()))?;
                    v[t] = Scalar::one();
                    v[y] = Scalar::one();
                }
                _ => return Err(CatalogError::Unsupported("no null direction for the dilaton".into())),
            }
        }
    } else if spec.flux_sign != FluxSign::Zero && !h2.is_zero() {
        return Err(CatalogError::Unsupported(format!("constant dilaton needs |H|^2 = 0, found {h2}")));
    }
    let gradient: Vec<Scalar> = (0..n).map(|i| (0..n).map(|j| &v[j] * &algebra.metric()[j][i]).sum()).collect();
    let id = format!("{} [{}]", g.name(), if choice == DilatonChoice::Constant { "constant dilaton" } else { "linear dilaton" });
    Ok(BackgroundSpec::new(id, Theory::TypeIICommon, Geometry::Group(algebra))
        .with_constant_flux("H3", &h)
        .with_dilaton(Dilaton { constant: Scalar::zero(), gradient }))
}

/// Counts the solutions of `c(dφ + ½H)ε = 0` among frame-constant spinors,
/// which are parallel for the flat connection with torsion.
pub fn susy_count(g: &GeometryProduct, choice: DilatonChoice) -> Result<SusyCount, CatalogError> {
    let b = realize(g, choice)?;
    let equations = verify_typeii_common(&b)?;
    let count = dilatino_kernel(&b)?;
    Ok(SusyCount {
        geometry: g.name(),
        dilaton: choice,
        iia: count.iia,
        iib: count.iib,
        sector: FRAME_CONSTANT_SECTOR.to_string(),
        equations,
    })
}
