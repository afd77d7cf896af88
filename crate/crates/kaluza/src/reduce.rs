use exactnum::Scalar;
use sugra::{BackgroundSpec, Geometry, Theory, VerificationReport};

use crate::flat::{chart_norm, reduce_flat_d11, FlatReduction};
use crate::group::{reduce_group, GroupReduction};
use crate::KaluzaError;

/// A background with a spacelike direction to reduce along: a Lie-algebra
/// element for groups, a constant coordinate vector for charts.
#[derive(Clone, Debug)]
pub struct ReductionData {
    pub upstairs: BackgroundSpec,
    pub direction: Vec<Scalar>,
    /// `|ξ|²`, positive.
    pub normalization: Scalar,
}

#[derive(Clone, Debug)]
pub enum Reduction {
    Group(GroupReduction),
    Flat(FlatReduction),
}

impl Reduction {
    pub fn report(&self) -> &VerificationReport {
        match self {
            Reduction::Group(r) => &r.report,
            Reduction::Flat(r) => &r.report,
        }
    }
}

impl ReductionData {
    pub fn new(upstairs: BackgroundSpec, direction: Vec<Scalar>) -> Result<Self, KaluzaError> {
        let normalization = match &upstairs.geometry {
            Geometry::Group(g) => {
                if direction.len() != g.dim() {
                    return Err(KaluzaError::DimensionMismatch { expected: g.dim(), found: direction.len() });
                }
                let n = g.pair(&direction, &direction);
                if !n.is_positive() {
                    return Err(KaluzaError::NotSpacelike(n.to_string()));
                }
                n
            }
            Geometry::Patch { .. } => chart_norm(&upstairs, &direction)?,
            Geometry::Product(_) => {
                return Err(KaluzaError::Unsupported("reductions of products of space forms are not implemented".into()))
            }
        };
        Ok(ReductionData { upstairs, direction, normalization })
    }

    pub fn reduce(&self) -> Result<Reduction, KaluzaError> {
        let b = &self.upstairs;
        match (&b.geometry, b.theory) {
            (Geometry::Group(g), Theory::D6) => Ok(Reduction::Group(reduce_group(g, &b.constant_flux("H3", 3)?, &self.direction)?)),
            (Geometry::Patch { .. }, Theory::D11) => Ok(Reduction::Flat(reduce_flat_d11(b, &self.direction)?)),
            _ => Err(KaluzaError::Unsupported(format!(
                "no reduction for a {} background on a {} geometry; implemented: six-dimensional groups and flat eleven-dimensional charts",
                b.theory,
                b.geometry.kind()
            ))),
        }
    }
}
