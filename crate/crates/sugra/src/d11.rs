use exactnum::{Coeff, Polynomial, Scalar};
use multilinear::{kulkarni_nomizu, BiSymTensor, KForm};

use crate::background::{BackgroundSpec, Theory};
use crate::fields::FrameData;
use crate::spinor::supercovariant_flatness;
use crate::tensors::{flux_quartic, flux_square, form_is_zero, lift_metric, plucker_violation, sym_mismatch, tensor_mismatch};
use crate::{SugraError, VerificationReport};

pub(crate) const PRODUCT_NOTE: &str = "supercovariant flatness is not computed on products of space forms; maximal supersymmetry is checked through the equivalent curvature conditions (parallel flux, Riemann formula, Plücker)";

/// `dF = 0`, `d⋆F = −½ F∧F` and `Ric = ½T² − ⅙ g |F|²`.
pub fn verify_d11(b: &BackgroundSpec) -> Result<VerificationReport, SugraError> {
    b.expect_theory(&[Theory::D11])?;
    let data = FrameData::new(b)?;
    let f = data.flux(b, "F4", 4)?;
    let mut report = VerificationReport::new(&b.id, b.theory.name());
    let norm = f.norm_squared(&data.space);
    report.invariant("|F|^2", &norm);

    report.check("closure dF = 0", data.closed(&f, "F"));
    report.check("maxwell d*F = -1/2 F^F", maxwell(&data, &f));

    let g = lift_metric::<Polynomial>(&data.space);
    let t2 = flux_square(&f, &data.space);
    let sixth = norm.scale(&Scalar::ratio(-1, 6));
    let rhs: Vec<Vec<Polynomial>> = t2
        .iter()
        .zip(&g)
        .map(|(tr, gr)| tr.iter().zip(gr).map(|(t, x)| t.scale(&Scalar::ratio(1, 2)).plus(&x.times(&sixth))).collect())
        .collect();
    report.check("einstein Ric = 1/2 T2 - 1/6 g|F|^2", sym_mismatch(&data.ricci, &rhs, &data.labels, ("Ric", "T")));
    Ok(report)
}

fn maxwell(data: &FrameData<'_>, f: &KForm<Polynomial>) -> Result<(), String> {
    let ff = f.wedge(f).scale(&Scalar::ratio(1, 2));
    let star = f.hodge(&data.space);
    match data.exterior(&star) {
        Some(dstar) => form_is_zero(&dstar.add(&data.to_coords(&ff)), &data.labels, "d*F + 1/2 F^F"),
        None => {
            data.parallel(&star, "*F")?;
            form_is_zero(&ff, &data.labels, "1/2 F^F (with d*F = 0)")
        }
    }
}

/// `R = −1/12 T⁴ + 1/36 g⊙T² − 1/72 |F|² g⊙g` in the curvature conventions
/// of the `geometry` crate.
pub fn d11_riemann_formula(f: &KForm<Polynomial>, space: &multilinear::QuadraticSpace) -> BiSymTensor<Polynomial> {
    let g = lift_metric::<Polynomial>(space);
    let t2 = flux_square(f, space);
    let t4 = flux_quartic(f, space);
    let norm = f.norm_squared(space);
    t4.scale(&Scalar::ratio(-1, 12))
        .add(&kulkarni_nomizu(&g, &t2).scale(&Scalar::ratio(1, 36)))
        .add(&kulkarni_nomizu(&g, &g).map(|x| x.times(&norm)).scale(&Scalar::ratio(-1, 72)))
}

/// The maximal-supersymmetry conditions: `∇F = 0`, the Riemann formula and
/// the Plücker identity; on charts also the supercovariant curvature.
pub fn verify_d11_maxsusy(b: &BackgroundSpec) -> Result<VerificationReport, SugraError> {
    b.expect_theory(&[Theory::D11])?;
    let data = FrameData::new(b)?;
    let f = data.flux(b, "F4", 4)?;
    let mut report = VerificationReport::new(&b.id, b.theory.name());
    report.check("parallel flux nabla F = 0", data.parallel(&f, "F"));
    let expected = d11_riemann_formula(&f, &data.space);
    report.check(
        "riemann formula",
        tensor_mismatch(&data.riemann, &expected, &data.labels, ("R", "-1/12 T4 + 1/36 g.T2 - 1/72 |F|^2 g.g")),
    );
    report.check("plucker identity", plucker(&f, &data.labels));
    if data.is_chart() {
        let flat = supercovariant_flatness(b)?;
        report.invariant("kernel dim", flat.kernel_dim);
        report.invariant("nu", &flat.nu);
        report.check("supercovariant flatness", flat.curvature_witness.clone().map_or(Ok(()), Err));
        report.check("traceless curvature", flat.trace_witness.clone().map_or(Ok(()), Err));
        report.check("field-equation identity e^i.R(X, e_i) = 0", flat.clifford_trace_witness.clone().map_or(Ok(()), Err));
        report.check("killing vector from spinor bilinears", flat.killing_witness.clone().map_or(Ok(()), Err));
        if let Some(v) = &flat.sample_killing_vector {
            report.invariant("sample killing vector", v.join(", "));
        }
    } else {
        report.note(PRODUCT_NOTE);
    }
    Ok(report)
}

pub(crate) fn plucker<C: Coeff + std::fmt::Display>(f: &KForm<C>, labels: &[String]) -> Result<(), String> {
    match plucker_violation(f) {
        None => Ok(()),
        Some(idx) => {
            let names: Vec<&str> = idx.iter().map(|&i| labels.get(i).map_or("?", String::as_str)).collect();
            Err(format!("i_({}) F ^ F != 0", names.join(", ")))
        }
    }
}
