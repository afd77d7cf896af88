use std::collections::BTreeMap;
use std::fmt;

use exactnum::{Polynomial, Scalar};
use geometry::{Coframe, CoordinatePatch, ProductGeometry};
use liealg::{CwData, MetricLieAlgebra};
use multilinear::{KForm, QuadraticSpace};
use serde::{Deserialize, Serialize};

use crate::SugraError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Theory {
    #[serde(rename = "d11")]
    D11,
    #[serde(rename = "iib")]
    Iib,
    #[serde(rename = "iia")]
    Iia,
    #[serde(rename = "d6-(1,0)")]
    D6,
    #[serde(rename = "typeII-common")]
    TypeIICommon,
}

impl Theory {
    pub fn name(self) -> &'static str {
        match self {
            Theory::D11 => "d11",
            Theory::Iib => "iib",
            Theory::Iia => "iia",
            Theory::D6 => "d6-(1,0)",
            Theory::TypeIICommon => "typeII-common",
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Where a background lives. Fluxes and dilaton gradients on `Product` and
/// `Group` geometries are frame components; on `Patch` they are coordinate
/// components.
#[derive(Clone, Debug, PartialEq)]
pub enum Geometry {
    Product(ProductGeometry),
    Group(MetricLieAlgebra),
    Patch { patch: CoordinatePatch, frame: Coframe },
}

impl Geometry {
    /// A Cahen–Wallach chart with its lightcone coframe.
    pub fn cahen_wallach(data: &CwData, orientation: i32) -> Result<Self, SugraError> {
        let patch = CoordinatePatch::cahen_wallach(data);
        let frame = Coframe::cahen_wallach(&patch)?.with_orientation(orientation)?;
        Ok(Geometry::Patch { patch, frame })
    }

    /// Flat space in Minkowski coordinates.
    pub fn flat(dim: usize) -> Result<Self, SugraError> {
        let patch = CoordinatePatch::minkowski(dim);
        let frame = Coframe::coordinate(&patch)?;
        Ok(Geometry::Patch { patch, frame })
    }

    pub fn dim(&self) -> usize {
        match self {
            Geometry::Product(p) => p.dim(),
            Geometry::Group(g) => g.dim(),
            Geometry::Patch { patch, .. } => patch.dim(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Geometry::Product(_) => "product",
            Geometry::Group(_) => "group",
            Geometry::Patch { .. } => "patch",
        }
    }

    /// The constant metric of the frame the spinors live in.
    pub fn frame_space(&self) -> &QuadraticSpace {
        match self {
            Geometry::Product(p) => p.space(),
            Geometry::Group(g) => g.space(),
            Geometry::Patch { frame, .. } => frame.space(),
        }
    }

    /// Names for the basis directions used in witnesses.
    pub fn labels(&self) -> Vec<String> {
        match self {
            Geometry::Patch { patch, .. } => patch.coords().iter().cloned().collect(),
            _ => (0..self.dim()).map(|i| format!("e{i}")).collect(),
        }
    }
}

/// `φ = constant + Σ gradientᵢ xⁱ`; the gradient is read in the basis the
/// geometry uses for fluxes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Dilaton {
    pub constant: Scalar,
    pub gradient: Vec<Scalar>,
}

impl Dilaton {
    pub fn constant(dim: usize, value: Scalar) -> Self {
        Dilaton { constant: value, gradient: vec![Scalar::zero(); dim] }
    }

    pub fn differential(&self) -> KForm<Scalar> {
        KForm::one_form(self.gradient.clone())
    }

    pub fn is_constant(&self) -> bool {
        self.gradient.iter().all(Scalar::is_zero)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BackgroundSpec {
    pub id: String,
    pub theory: Theory,
    pub geometry: Geometry,
    pub fluxes: BTreeMap<String, KForm<Polynomial>>,
    pub dilaton: Option<Dilaton>,
    pub params: BTreeMap<String, Scalar>,
}

impl BackgroundSpec {
    pub fn new(id: impl Into<String>, theory: Theory, geometry: Geometry) -> Self {
        BackgroundSpec { id: id.into(), theory, geometry, fluxes: BTreeMap::new(), dilaton: None, params: BTreeMap::new() }
    }

    pub fn with_flux(mut self, name: &str, form: KForm<Polynomial>) -> Self {
        self.fluxes.insert(name.to_string(), form);
        self
    }

    pub fn with_constant_flux(self, name: &str, form: &KForm<Scalar>) -> Self {
        self.with_flux(name, form.map_coeffs(|c| Polynomial::constant(c.clone())))
    }

    pub fn with_dilaton(mut self, dilaton: Dilaton) -> Self {
        self.dilaton = Some(dilaton);
        self
    }

    pub fn with_param(mut self, name: &str, value: Scalar) -> Self {
        self.params.insert(name.to_string(), value);
        self
    }

    pub fn expect_theory(&self, allowed: &[Theory]) -> Result<(), SugraError> {
        if allowed.contains(&self.theory) {
            return Ok(());
        }
        Err(SugraError::WrongTheory {
            id: self.id.clone(),
            expected: allowed.iter().map(|t| t.name()).collect::<Vec<_>>().join(" or "),
            found: self.theory.name().to_string(),
        })
    }

    /// The named flux, or zero of the given degree when absent.
    pub fn flux_or_zero(&self, name: &str, degree: usize) -> Result<KForm<Polynomial>, SugraError> {
        match self.fluxes.get(name) {
            None => Ok(KForm::zero(self.geometry.dim(), degree)),
            Some(f) if f.is_zero() => Ok(KForm::zero(self.geometry.dim(), degree)),
            Some(f) if f.degree() != degree => {
                Err(SugraError::FluxDegree { name: name.to_string(), expected: degree, found: f.degree() })
            }
            Some(f) => Ok(f.clone()),
        }
    }

    /// The named flux with constant coefficients.
    pub fn constant_flux(&self, name: &str, degree: usize) -> Result<KForm<Scalar>, SugraError> {
        let f = self.flux_or_zero(name, degree)?;
        constant_form(&f).ok_or_else(|| SugraError::Unsupported(format!("flux `{name}` has non-constant components")))
    }
}

/// Drops polynomial coefficients to scalars when they are all constant.
pub fn constant_form(f: &KForm<Polynomial>) -> Option<KForm<Scalar>> {
    let mut terms = Vec::new();
    for (idx, c) in f.indexed_terms() {
        terms.push((idx, c.as_scalar()?));
    }
    Some(KForm::from_terms(f.dim(), f.degree(), terms))
}
