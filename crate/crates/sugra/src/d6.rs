use exactnum::{Polynomial, Scalar};
use geometry::{curvature_with_torsion, flat_torsion_consequences, group_curvature_with_torsion, solve_torsion_scale, FlatTorsionReport};
use liealg::{biinvariant_ricci, ce_differential, MetricLieAlgebra};
use multilinear::{BiSymTensor, KForm};

use crate::background::{BackgroundSpec, Geometry, Theory};
use crate::fields::FrameData;
use crate::tensors::{flux_square, form_is_zero, sym_mismatch};
use crate::{SugraError, VerificationReport};

/// `dH = 0`, `⋆H = −H`, `Ric = ½⟨ι_XH, ι_YH⟩` (the `−¼` of the full
/// contraction in the opposite Ricci sign) and flatness of `D = ∇ + ½T`.
pub fn verify_d6(b: &BackgroundSpec) -> Result<VerificationReport, SugraError> {
    b.expect_theory(&[Theory::D6])?;
    let mut report = VerificationReport::new(&b.id, b.theory.name());
    let labels = b.geometry.labels();
    match &b.geometry {
        Geometry::Group(g) => {
            let h = b.constant_flux("H3", 3)?;
            group_checks(&mut report, g, &h, &labels)?;
        }
        Geometry::Patch { patch, frame } => {
            let data = FrameData::new(b)?;
            let h = data.flux(b, "H3", 3)?;
            let h_coords = b.flux_or_zero("H3", 3)?;
            report.check("closure dH = 0", data.closed(&h, "H"));
            report.check("anti-selfduality *H = -H", form_is_zero(&h.hodge(&data.space).add(&h), &labels, "*H + H"));
            let rhs = half(flux_square(&h, &data.space));
            report.check("einstein Ric = 1/2 <i_X H, i_Y H>", sym_mismatch(&data.ricci, &rhs, &labels, ("Ric", "1/2 H2")));
            let rd = curvature_with_torsion(patch, &h_coords).map(|r| frame.tensor4_to_frame(&r));
            report.check("flat parallelising connection R^D = 0", flat_witness(rd, &labels));
            if !h_coords.is_zero() {
                match solve_torsion_scale(patch, &h_coords) {
                    Ok(roots) => report.invariant(
                        "torsion scales c with R^D(cH) = 0",
                        roots.iter().map(Scalar::to_string).collect::<Vec<_>>().join(", "),
                    ),
                    Err(e) => report.note(format!("torsion scale not solved: {e}")),
                }
            }
        }
        Geometry::Product(_) => {
            return Err(SugraError::Unsupported("six-dimensional backgrounds are groups or coordinate charts".into()))
        }
    }
    Ok(report)
}

fn half<C: exactnum::Coeff>(t: Vec<Vec<C>>) -> Vec<Vec<C>> {
    t.into_iter().map(|r| r.into_iter().map(|x| x.scale(&Scalar::ratio(1, 2))).collect()).collect()
}

fn flat_witness<C: exactnum::Coeff + std::fmt::Display>(
    rd: Result<BiSymTensor<C>, geometry::GeometryError>,
    labels: &[String],
) -> Result<(), String> {
    match rd {
        Err(e) => Err(e.to_string()),
        Ok(r) => match r.first_nonzero() {
            None => Ok(()),
            Some(([a, b, c, d], v)) => Err(format!("R^D({}, {}, {}, {}) = {v}", labels[a], labels[b], labels[c], labels[d])),
        },
    }
}

fn group_checks(report: &mut VerificationReport, g: &MetricLieAlgebra, h: &KForm<Scalar>, labels: &[String]) -> Result<(), SugraError> {
    let dh = ce_differential(g.algebra(), h);
    report.check("closure dH = 0", form_is_zero(&dh, labels, "dH"));
    report.check("anti-selfduality *H = -H", form_is_zero(&h.hodge(g.space()).add(h), labels, "*H + H"));
    let ric = biinvariant_ricci(g)?;
    let rhs = half(flux_square(h, g.space()));
    report.check("einstein Ric = 1/2 <i_X H, i_Y H>", sym_mismatch(&ric, &rhs, labels, ("Ric", "1/2 H2")));
    report.check("flat parallelising connection R^D = 0", flat_witness(group_curvature_with_torsion(g, h), labels));
    let consequences: FlatTorsionReport = flat_torsion_consequences(g, h);
    if consequences.flat {
        report.check("parallel torsion nabla H = 0", if consequences.parallel { Ok(()) } else { Err(consequences.witness.clone().unwrap_or_default()) });
        report.check("jacobi identity for T", if consequences.jacobi { Ok(()) } else { Err(consequences.witness.clone().unwrap_or_default()) });
    }
    report.invariant("|H|^2", h.norm_squared(g.space()));
    Ok(())
}

/// A Cahen–Wallach chart of the six-dimensional Nappi–Witten group,
/// `g = 2dx⁺dx⁻ − ¼Σ(xⁱ)²(dx⁻)² + Σ(dxⁱ)²`, with
/// `H = c dx⁻∧(dx¹∧dx² + dx³∧dx⁴)`.
pub fn nw6_chart(c: &Scalar) -> Result<BackgroundSpec, SugraError> {
    let data = liealg::CwData::diagonal(&vec![Scalar::ratio(-1, 4); 4]);
    let geometry = Geometry::cahen_wallach(&data, NW6_CHART_ORIENTATION)?;
    let h: KForm<Polynomial> = KForm::basis(6, &[1, 2, 3]).add(&KForm::basis(6, &[1, 4, 5])).scale(c);
    Ok(BackgroundSpec::new("nw6-chart", Theory::D6, geometry).with_flux("H3", h).with_param("c", c.clone()))
}

/// Orientation of the lightcone frame in which the chart three-form is
/// anti-selfdual.
pub const NW6_CHART_ORIENTATION: i32 = -1;
