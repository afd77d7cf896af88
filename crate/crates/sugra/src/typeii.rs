use clifford::{kernel, FrameClifford, SpinMatrix};
use exactnum::Scalar;
use multilinear::{KForm, QuadraticSpace};
use serde::{Deserialize, Serialize};

use crate::background::{constant_form, BackgroundSpec, Geometry, Theory};
use crate::tensors::form_is_zero;
use crate::{SugraError, VerificationReport};

/// Constant frame data of a type-II common-sector background.
struct CommonSector<'a> {
    space: &'a QuadraticSpace,
    h: KForm<Scalar>,
    dphi: KForm<Scalar>,
    labels: Vec<String>,
    dh: KForm<Scalar>,
    /// `(∇dφ)(X, Y)`, first nonzero component.
    hessian: Option<String>,
}

fn common_sector(b: &BackgroundSpec) -> Result<CommonSector<'_>, SugraError> {
    b.expect_theory(&[Theory::TypeIICommon, Theory::Iia, Theory::Iib])?;
    let labels = b.geometry.labels();
    let dim = b.geometry.dim();
    let dphi = b.dilaton.as_ref().map_or_else(|| KForm::zero(dim, 1), |d| d.differential());
    if dphi.dim() != dim {
        return Err(SugraError::Unsupported(format!("dilaton gradient has {} components, expected {dim}", dphi.dim())));
    }
    match &b.geometry {
        Geometry::Group(g) => {
            let h = b.constant_flux("H3", 3)?;
            let dh = liealg::ce_differential(g.algebra(), &h);
            // ∇_X α (Y) = −½ α([X, Y]) for left-invariant α on a bi-invariant group
            let alg = g.algebra();
            let comps = dphi.one_form_components();
            let mut hessian = None;
            'outer: for i in 0..dim {
                for j in i + 1..dim {
                    let v: Scalar = alg.bracket_basis(i, j).iter().zip(&comps).map(|(x, y)| x * y).sum();
                    if !v.is_zero() {
                        hessian = Some(format!("dphi([{}, {}]) = {v}, so nabla dphi != 0", labels[i], labels[j]));
                        break 'outer;
                    }
                }
            }
            Ok(CommonSector { space: g.space(), h, dphi, labels, dh, hessian })
        }
        Geometry::Patch { patch, frame } => {
            let hp = b.flux_or_zero("H3", 3)?;
            let h = constant_form(&frame.form_to_frame(&hp))
                .ok_or_else(|| SugraError::Unsupported("type-II flux with non-constant frame components".into()))?;
            let dh = constant_form(&geometry::exterior_derivative(patch, &hp))
                .ok_or_else(|| SugraError::Unsupported("dH with non-constant components".into()))?;
            // affine φ: dφ has constant coordinate components, ∇dφ = −Γ^λ_{μν} ∂_λφ
            let coords = dphi.map_coeffs(|c| exactnum::Polynomial::constant(c.clone()));
            let nabla = geometry::covariant_derivative(patch, &geometry::christoffel(patch), &coords);
            let hessian = nabla
                .iter()
                .enumerate()
                .find_map(|(m, f)| form_is_zero(f, &labels, &format!("nabla_{} dphi", labels[m])).err());
            let dphi_frame = constant_form(&frame.form_to_frame(&coords))
                .ok_or_else(|| SugraError::Unsupported("dilaton gradient is not frame-constant".into()))?;
            Ok(CommonSector { space: frame.space(), h, dphi: dphi_frame, labels, dh, hessian })
        }
        Geometry::Product(_) => Err(SugraError::Unsupported(
            "type-II products are given as direct sums of metric Lie algebras or flat charts".into(),
        )),
    }
}

/// `∇dφ = 0`, `dφ ∧ ⋆H = 0`, `|dφ|² − ¼|H|² = 0` and `dH = 0`.
pub fn verify_typeii_common(b: &BackgroundSpec) -> Result<VerificationReport, SugraError> {
    let s = common_sector(b)?;
    let mut report = VerificationReport::new(&b.id, b.theory.name());
    report.check("closure dH = 0", form_is_zero(&s.dh, &s.labels, "dH"));
    report.check("parallel dilaton gradient nabla dphi = 0", s.hessian.clone().map_or(Ok(()), Err));
    let star_h = s.h.hodge(s.space);
    report.check("dphi ^ *H = 0", form_is_zero(&s.dphi.wedge(&star_h), &s.labels, "dphi ^ *H"));
    let h2 = s.h.norm_squared(s.space);
    let phi2 = s.dphi.norm_squared(s.space);
    let balance = &phi2 - &(&h2 * &Scalar::ratio(1, 4));
    report.invariant("|H|^2", &h2);
    report.invariant("|dphi|^2", &phi2);
    report.check(
        "|dphi|^2 - 1/4 |H|^2 = 0",
        if balance.is_zero() { Ok(()) } else { Err(format!("|dphi|^2 - 1/4 |H|^2 = {balance}")) },
    );
    Ok(report)
}

/// Dimensions of the frame-constant solutions of `c(dφ + ½H) ε = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DilatinoCount {
    /// On `S₊ ⊕ S₋`, the full 32-dimensional spinor space.
    pub iia: usize,
    /// On `S₊ ⊕ S₊`: twice the kernel on one chirality.
    pub iib: usize,
}

pub fn dilatino_kernel(b: &BackgroundSpec) -> Result<DilatinoCount, SugraError> {
    let s = common_sector(b)?;
    let cl = FrameClifford::with_orientation(s.space.metric().to_vec(), s.space.orientation())?;
    let op: SpinMatrix<Scalar> = cl.clifford_action(&s.dphi).add(&cl.clifford_action(&s.h).scale(&Scalar::ratio(1, 2)));
    let n = cl.spinor_dim();
    let full = kernel(&[op.clone()])?.dim;
    let gamma = cl.chirality().ok_or_else(|| SugraError::Unsupported("no chirality operator".into()))?;
    let plus = kernel(&[op, gamma.sub(&SpinMatrix::identity(n))])?.dim;
    Ok(DilatinoCount { iia: full, iib: 2 * plus })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{flat, flat_linear_dilaton};

    #[test]
    fn flat_counts() {
        let b = flat("flat", Theory::TypeIICommon, 10).unwrap();
        assert_eq!(dilatino_kernel(&b).unwrap(), DilatinoCount { iia: 32, iib: 32 });
        let b = flat_linear_dilaton(Theory::TypeIICommon, &Scalar::from(2), &Scalar::from(3)).unwrap();
        assert_eq!(dilatino_kernel(&b).unwrap(), DilatinoCount { iia: 16, iib: 16 });
        assert!(verify_typeii_common(&b).unwrap().passed());
    }

    #[test]
    fn spacelike_gradient_breaks_balance() {
        let mut b = flat_linear_dilaton(Theory::TypeIICommon, &Scalar::zero(), &Scalar::one()).unwrap();
        b.dilaton.as_mut().unwrap().gradient[0] = Scalar::zero();
        let r = verify_typeii_common(&b).unwrap();
        assert!(!r.passed());
        assert!(r.failures().any(|c| c.name.starts_with("|dphi|^2")));
        assert_eq!(dilatino_kernel(&b).unwrap().iia, 0);
    }
}
