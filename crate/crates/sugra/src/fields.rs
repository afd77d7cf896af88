use exactnum::{Coeff, Polynomial, Scalar};
use geometry::{christoffel, covariant_derivative, curvature_operators, exterior_derivative, riemann, ricci, Coframe, CoordinatePatch};
use multilinear::{BiSymTensor, KForm, QuadraticSpace, SymTensor};

use crate::background::{constant_form, BackgroundSpec, Geometry};
use crate::tensors::{form_is_zero, holonomy_violation};
use crate::SugraError;

/// Curvature and flux data expressed in the frame the verifiers work in.
pub(crate) struct FrameData<'a> {
    pub space: QuadraticSpace,
    pub riemann: BiSymTensor<Polynomial>,
    pub ricci: SymTensor<Polynomial>,
    pub labels: Vec<String>,
    source: Source<'a>,
}

enum Source<'a> {
    Patch { patch: &'a CoordinatePatch, frame: &'a Coframe },
    Symmetric { operators: Vec<KForm<Scalar>> },
}

impl<'a> FrameData<'a> {
    /// Products of space forms and polynomial charts; group geometries are
    /// handled by the torsion-based verifiers.
    pub fn new(b: &'a BackgroundSpec) -> Result<Self, SugraError> {
        match &b.geometry {
            Geometry::Patch { patch, frame } => Ok(FrameData {
                space: frame.space().clone(),
                riemann: frame.tensor4_to_frame(&riemann(patch)),
                ricci: frame.sym_to_frame(&ricci(patch)),
                labels: b.geometry.labels(),
                source: Source::Patch { patch, frame },
            }),
            Geometry::Product(p) => {
                let r = p.riemann();
                Ok(FrameData {
                    space: p.space().clone(),
                    riemann: r.map(|x| Polynomial::constant(x.clone())),
                    ricci: p.ricci().iter().map(|row| row.iter().map(|x| Polynomial::constant(x.clone())).collect()).collect(),
                    labels: b.geometry.labels(),
                    source: Source::Symmetric { operators: curvature_operators(&r) },
                })
            }
            Geometry::Group(_) => Err(SugraError::Unsupported(format!(
                "`{}` is a group geometry; use a product of space forms or a coordinate chart",
                b.id
            ))),
        }
    }

    /// The named flux in frame components.
    pub fn flux(&self, b: &BackgroundSpec, name: &str, degree: usize) -> Result<KForm<Polynomial>, SugraError> {
        let f = b.flux_or_zero(name, degree)?;
        Ok(match &self.source {
            Source::Patch { frame, .. } => frame.form_to_frame(&f),
            Source::Symmetric { .. } => f,
        })
    }

    pub fn is_chart(&self) -> bool {
        matches!(self.source, Source::Patch { .. })
    }

    /// `d` of a frame form, or on a product the statement that the form
    /// extends to a parallel (hence closed) field.
    pub fn closed(&self, f: &KForm<Polynomial>, what: &str) -> Result<(), String> {
        match &self.source {
            Source::Patch { patch, frame } => {
                let df = exterior_derivative(patch, &frame.form_to_coords(f));
                form_is_zero(&df, &self.labels, &format!("d{what}"))
            }
            Source::Symmetric { .. } => self.parallel(f, what),
        }
    }

    /// `∇f = 0`. On a symmetric product this is invariance under the
    /// curvature operators, which span the holonomy algebra.
    pub fn parallel(&self, f: &KForm<Polynomial>, what: &str) -> Result<(), String> {
        match &self.source {
            Source::Patch { patch, frame } => {
                let gamma = christoffel(patch);
                let nabla = covariant_derivative(patch, &gamma, &frame.form_to_coords(f));
                for (m, d) in nabla.iter().enumerate() {
                    form_is_zero(d, &self.labels, &format!("∇_{} {what}", self.labels[m]))?;
                }
                Ok(())
            }
            Source::Symmetric { operators } => {
                let f = constant_form(f).ok_or_else(|| format!("{what} has non-constant frame components"))?;
                match holonomy_violation(&self.space, operators, &f) {
                    None => Ok(()),
                    Some(k) => Err(format!(
                        "{what} is moved by the curvature operator {}, so it is not parallel",
                        describe(&operators[k], &self.labels)
                    )),
                }
            }
        }
    }

    /// `d(ω)` with `ω` given in frame components; products use the parallel
    /// criterion like [`Self::closed`].
    pub fn exterior(&self, f: &KForm<Polynomial>) -> Option<KForm<Polynomial>> {
        match &self.source {
            Source::Patch { patch, frame } => Some(exterior_derivative(patch, &frame.form_to_coords(f))),
            Source::Symmetric { .. } => None,
        }
    }

    /// A frame form rewritten in chart coordinates; identity on products.
    pub fn to_coords(&self, f: &KForm<Polynomial>) -> KForm<Polynomial> {
        match &self.source {
            Source::Patch { frame, .. } => frame.form_to_coords(f),
            Source::Symmetric { .. } => f.clone(),
        }
    }
}

fn describe(op: &KForm<Scalar>, labels: &[String]) -> String {
    op.indexed_terms()
        .map(|(idx, c)| {
            let names: Vec<&str> = idx.iter().map(|&i| labels.get(i).map_or("?", String::as_str)).collect();
            format!("{c}·{}", names.join("∧"))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// `ι_a ι_b ι_c F` for every frame triple with a nonzero result.
pub(crate) fn triple_contractions<C: Coeff>(f: &KForm<C>) -> Vec<([usize; 3], KForm<C>)> {
    let n = f.dim();
    let mut out = Vec::new();
    for a in 0..n {
        let fa = f.interior_basis(a);
        if fa.is_zero() {
            continue;
        }
        for b in a + 1..n {
            let fab = fa.interior_basis(b);
            if fab.is_zero() {
                continue;
            }
            for c in b + 1..n {
                let fabc = fab.interior_basis(c);
                if !fabc.is_zero() {
                    out.push(([a, b, c], fabc));
                }
            }
        }
    }
    out
}
