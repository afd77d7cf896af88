use exactnum::Scalar;
use liealg::canonical_three_form;
use serde::{Deserialize, Serialize};

use crate::factors::{realization, ElementaryFactor, FactorKind, TorsionClass};
use crate::products::GeometryProduct;
use crate::CatalogError;

/// Sign of `|H|²` for a product, from the factor torsion classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FluxSign {
    Negative,
    Zero,
    Positive,
    /// `AdS₃` against round factors: the sign depends on the radii.
    RadiusDependent,
}

/// The linear dilatons solving `∇dφ = 0`, `dφ∧⋆H = 0`, `|dφ|² = ¼|H|²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DilatonSpec {
    /// e.g. `phi = a + b x^- + 1/2 |H| y`.
    pub pattern: String,
    pub flux_sign: FluxSign,
    /// A `b x⁻` term along a null direction is allowed.
    pub null_term: bool,
    /// A `½|H| y` term along a spacelike flat direction is required.
    pub spacelike_term: bool,
    /// The dilaton may be constant, for some choice of parameters.
    pub constant_allowed: bool,
    pub constraint: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DilatonOutcome {
    Accepted(DilatonSpec),
    Rejected { reason: String },
}

impl DilatonOutcome {
    pub fn accepted(&self) -> Option<&DilatonSpec> {
        match self {
            DilatonOutcome::Accepted(s) => Some(s),
            DilatonOutcome::Rejected { .. } => None,
        }
    }
}

pub fn flux_sign(g: &GeometryProduct) -> Result<FluxSign, CatalogError> {
    let (mut neg, mut pos) = (false, false);
    for &f in g.factors() {
        match ElementaryFactor::new(f)?.torsion {
            TorsionClass::ClosedNegative => neg = true,
            TorsionClass::ClosedPositive | TorsionClass::NotClosedPositive => pos = true,
            TorsionClass::Zero | TorsionClass::ClosedNull => {}
        }
    }
    Ok(match (neg, pos) {
        (true, true) => FluxSign::RadiusDependent,
        (true, false) => FluxSign::Negative,
        (false, true) => FluxSign::Positive,
        (false, false) => FluxSign::Zero,
    })
}

/// Solves the type-II dilaton equations on a parallelisable product.
pub fn solve_dilaton(g: &GeometryProduct) -> Result<DilatonOutcome, CatalogError> {
    for &f in g.factors() {
        if !ElementaryFactor::new(f)?.torsion.is_closed() {
            return Ok(DilatonOutcome::Rejected {
                reason: format!("dH != 0 on {}, but type II backgrounds need a closed H", f.name()),
            });
        }
    }
    let sign = flux_sign(g)?;
    let spacelike = g.flat_lines() > 0;
    let timelike = g.lorentzian() == FactorKind::TimeLine;
    let null = g.has_cw() || (timelike && spacelike);
    let reject = |reason: &str| Ok(DilatonOutcome::Rejected { reason: reason.to_string() });
    let spec = |pattern: &str, null_term, spacelike_term, constant_allowed, constraint: Option<String>| {
        Ok(DilatonOutcome::Accepted(DilatonSpec {
            pattern: pattern.to_string(),
            flux_sign: sign,
            null_term,
            spacelike_term,
            constant_allowed,
            constraint,
        }))
    };
    match sign {
        FluxSign::Negative => reject("|H|^2 < 0 cannot be balanced: dphi has no timelike component, so |dphi|^2 >= 0"),
        FluxSign::Positive | FluxSign::RadiusDependent if !spacelike => {
            if sign == FluxSign::RadiusDependent {
                spec("phi = a", false, false, true, Some(radius_constraint(g)))
            } else if timelike {
                reject("|H|^2 > 0 cannot be balanced: dphi is timelike, so |dphi|^2 <= 0")
            } else if g.has_cw() {
                reject("|H|^2 > 0 cannot be balanced: dphi is null, so |dphi|^2 = 0")
            } else {
                reject("|H|^2 > 0 cannot be balanced: the dilaton is constant")
            }
        }
        FluxSign::Positive if g.has_cw() => spec("phi = a + b x^- + 1/2 |H| y", true, true, false, None),
        FluxSign::Positive => spec("phi = a + 1/2 |H| y", false, true, false, None),
        FluxSign::RadiusDependent => spec("phi = a + 1/2 |H| y", false, true, true, Some(radius_constraint(g))),
        FluxSign::Zero if null => spec("phi = a + b x^-", true, false, true, None),
        FluxSign::Zero => spec("phi = a", false, false, true, None),
    }
}

fn radius_constraint(g: &GeometryProduct) -> String {
    let spheres = g.count(FactorKind::S3);
    let lhs: Vec<String> = (1..=spheres).map(|i| format!("1/R{i}^2")).collect();
    format!("{} >= 1/R0^2, saturated iff the dilaton is constant", lhs.join(" + "))
}

/// How `AdS₃` of radius `R₀` and round `S³` factors of radii `Rᵢ` balance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Balance {
    /// `|H|² < 0`: not a background.
    Violated,
    /// `|H|² = 0`: constant dilaton.
    Saturated,
    /// `|H|² > 0`: linear dilaton with slope `½|H|`.
    Strict { slope: Scalar },
}

/// `|H|²` of `AdS₃ × S³ × …` from the canonical 3-forms of the factor
/// groups at the given squared radii.
pub fn ads_sphere_balance(r0_sq: &Scalar, sphere_r_sq: &[Scalar]) -> Result<(Scalar, Balance), CatalogError> {
    let quarter = Scalar::ratio(1, 4);
    let mut g = realization(FactorKind::Ads3, &(r0_sq * &quarter))?;
    for r in sphere_r_sq {
        g = g.direct_sum(&realization(FactorKind::S3, &(r * &quarter))?);
    }
    let h2 = canonical_three_form(&g)?.norm_squared(g.space());
    let balance = match h2.signum() {
        -1 => Balance::Violated,
        0 => Balance::Saturated,
        _ => Balance::Strict { slope: &h2.sqrt()? * &Scalar::ratio(1, 2) },
    };
    Ok((h2, balance))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: i64) -> Scalar {
        Scalar::from(x)
    }

    #[test]
    fn radius_bound() {
        assert_eq!(ads_sphere_balance(&s(1), &[s(2), s(2)]).unwrap().1, Balance::Saturated);
        assert_eq!(ads_sphere_balance(&s(1), &[s(1)]).unwrap().1, Balance::Saturated);
        assert_eq!(ads_sphere_balance(&s(1), &[s(3), s(3)]).unwrap().1, Balance::Violated);
        let (h2, b) = ads_sphere_balance(&s(1), &[s(1), s(1)]).unwrap();
        assert_eq!(h2, s(4));
        assert_eq!(b, Balance::Strict { slope: s(1) });
    }

    #[test]
    fn flux_is_four_over_radius_squared() {
        let (h2, _) = ads_sphere_balance(&s(4), &[]).unwrap();
        assert_eq!(h2, s(-1));
    }
}
