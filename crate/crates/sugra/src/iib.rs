use exactnum::{Coeff, Polynomial, Scalar};
use multilinear::{lambda_action, plucker_check, BiSymTensor, KForm, QuadraticSpace};

use crate::background::{constant_form, BackgroundSpec, Theory};
use crate::d11::PRODUCT_NOTE;
use crate::fields::{triple_contractions, FrameData};
use crate::spinor::{ensure_self_dual, supercovariant_flatness};
use crate::tensors::{flux_quartic, form_is_zero, tensor_mismatch};
use crate::{SugraError, VerificationReport};

/// `R(X,Y,Z,W) = ⟨ι_Xι_W F, ι_Yι_Z F⟩ − ⟨ι_Xι_Z F, ι_Yι_W F⟩` in the
/// curvature conventions of the `geometry` crate.
pub fn iib_riemann_formula(f: &KForm<Polynomial>, space: &QuadraticSpace) -> BiSymTensor<Polynomial> {
    let t4 = flux_quartic(f, space);
    BiSymTensor::from_fn(f.dim(), |a, b, c, d| t4.get(a, d, b, c).minus(t4.get(a, c, b, d)))
}

/// `λ(ι_Xι_Yι_Z F) F = 0` for all frame triples.
fn plucker_jacobi(f: &KForm<Polynomial>, space: &QuadraticSpace, labels: &[String]) -> Result<(), String> {
    for ([a, b, c], op) in triple_contractions(f) {
        let moved = lambda_action(space, &op, f);
        if !moved.is_zero() {
            let name = format!("lambda(i_({}, {}, {}) F) F", labels[a], labels[b], labels[c]);
            return form_is_zero(&moved, labels, &name);
        }
    }
    Ok(())
}

/// A decomposable `G` with `F = G + ⋆G`, searched among the frame
/// monomials of `F`.
fn self_dual_split(f: &KForm<Polynomial>, space: &QuadraticSpace) -> Result<KForm<Scalar>, String> {
    let f = constant_form(f).ok_or("F has non-constant frame components")?;
    if f.is_zero() {
        return Ok(f);
    }
    for (idx, c) in f.indexed_terms() {
        let g: KForm<Scalar> = KForm::from_terms(f.dim(), f.degree(), vec![(idx, c.clone())]);
        if g.add(&g.hodge(space)) == f {
            let decomposable = plucker_check(&g).map_err(|e| e.to_string())?.is_decomposable();
            if decomposable {
                return Ok(g);
            }
        }
    }
    Err("no frame monomial G of F satisfies F = G + *G".into())
}

/// The IIB maximal-supersymmetry conditions in the constant axion-dilaton
/// sector with only the five-form switched on.
pub fn verify_iib_maxsusy(b: &BackgroundSpec) -> Result<VerificationReport, SugraError> {
    b.expect_theory(&[Theory::Iib])?;
    let data = FrameData::new(b)?;
    let f = data.flux(b, "F5", 5)?;
    ensure_self_dual(&f, &data.space, &data.labels)?;
    let mut report = VerificationReport::new(&b.id, b.theory.name());
    report.check("self-duality *F = F", Ok(()));
    report.check("closure dF = 0", data.closed(&f, "F"));
    report.check("parallel flux nabla F = 0", data.parallel(&f, "F"));
    let expected = iib_riemann_formula(&f, &data.space);
    report.check(
        "riemann formula",
        tensor_mismatch(&data.riemann, &expected, &data.labels, ("R", "<i_X i_W F, i_Y i_Z F> - <i_X i_Z F, i_Y i_W F>")),
    );
    report.check("plucker-jacobi identity", plucker_jacobi(&f, &data.space, &data.labels));
    match self_dual_split(&f, &data.space) {
        Ok(g) => {
            report.invariant("G", describe(&g, &data.labels));
            report.check("F = G + *G with G decomposable", Ok(()));
        }
        Err(w) => report.check("F = G + *G with G decomposable", Err(w)),
    }
    if data.is_chart() {
        let flat = supercovariant_flatness(b)?;
        report.invariant("kernel dim", flat.kernel_dim);
        report.invariant("nu", &flat.nu);
        if let Some(s) = flat.chirality {
            report.invariant("chirality", s);
        }
        report.check("supercovariant flatness", flat.curvature_witness.clone().map_or(Ok(()), Err));
        report.check("traceless curvature", flat.trace_witness.clone().map_or(Ok(()), Err));
    } else {
        report.note(PRODUCT_NOTE);
    }
    Ok(report)
}

fn describe(g: &KForm<Scalar>, labels: &[String]) -> String {
    if g.is_zero() {
        return "0".into();
    }
    g.indexed_terms()
        .map(|(idx, c)| {
            let names: Vec<&str> = idx.iter().map(|&i| labels.get(i).map_or("?", String::as_str)).collect();
            format!("{c} {}", names.join("^"))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}
