//! Builtin backgrounds at chosen parameters, optionally perturbed away
//! from a solution.

use std::fmt;
use std::str::FromStr;

use exactnum::Scalar;
use liealg::CwData;
use multilinear::KForm;
use sugra::builtins::{self, IIB_WAVE_ORIENTATION};
use sugra::{constant_form, BackgroundSpec, Geometry};

use crate::expr::{eval, Bindings};
use crate::CatalogError;

/// A deliberate defect, used as a negative control.
#[derive(Clone, Debug, PartialEq)]
pub enum Perturbation {
    /// Adds `delta` to `A_ij` and `A_ji` (1-based) of a Cahen–Wallach wave.
    Matrix { i: usize, j: usize, delta: Scalar },
    /// Exchanges the curvature coefficients of a Freund–Rubin pair.
    SwapRadii,
    /// Adds `e⁰∧e²∧e³` to the torsion of a group background.
    NonClosedH,
}

impl FromStr for Perturbation {
    type Err = CatalogError;

    /// `A11=+1`, `A2,3=-1/2`, `swap-radii`, `nonclosed-H`.
    fn from_str(s: &str) -> Result<Self, CatalogError> {
        let bad = || CatalogError::Malformed(format!("unknown perturbation `{s}` (expected Aij=<scalar>, swap-radii or nonclosed-H)"));
        match s {
            "swap-radii" => return Ok(Perturbation::SwapRadii),
            "nonclosed-H" => return Ok(Perturbation::NonClosedH),
            _ => {}
        }
        let (lhs, rhs) = s.strip_prefix('A').and_then(|r| r.split_once('=')).ok_or_else(bad)?;
        let (i, j) = match lhs.split_once(',') {
            Some((i, j)) => (i.trim().parse().map_err(|_| bad())?, j.trim().parse().map_err(|_| bad())?),
            None if lhs.len() == 2 && lhs.chars().all(|c| c.is_ascii_digit()) => {
                let d: Vec<usize> = lhs.chars().map(|c| c as usize - '0' as usize).collect();
                (d[0], d[1])
            }
            None => return Err(bad()),
        };
        if i == 0 || j == 0 {
            return Err(bad());
        }
        Ok(Perturbation::Matrix { i, j, delta: eval(rhs, &Bindings::new())? })
    }
}

impl fmt::Display for Perturbation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Perturbation::Matrix { i, j, delta } => write!(f, "A{i},{j}+={delta}"),
            Perturbation::SwapRadii => f.write_str("swap-radii"),
            Perturbation::NonClosedH => f.write_str("nonclosed-H"),
        }
    }
}

/// Parameter values and perturbations requested for a run.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub params: Bindings,
    pub perturbations: Vec<Perturbation>,
}

impl Overrides {
    pub fn is_empty(&self) -> bool {
        self.params.is_empty() && self.perturbations.is_empty()
    }
}

/// Builtin ids and the parameters each accepts.
pub const BUILTIN_PARAMS: &[(&str, &[&str])] = &[
    ("ads3xs3", &["alpha", "beta"]),
    ("ads4xs7", &["R"]),
    ("ads5xs5", &["R"]),
    ("ads7xs4", &["R"]),
    ("cw10", &["mu"]),
    ("cw11", &["mu"]),
    ("flat10-iia", &[]),
    ("flat10-iib", &[]),
    ("flat11", &[]),
    ("flat6", &[]),
    ("nw6", &[]),
];

pub fn builtin_ids() -> impl Iterator<Item = &'static str> {
    BUILTIN_PARAMS.iter().map(|(id, _)| *id)
}

/// Builds a builtin background. With `strict`, parameters the background
/// does not take are an error; otherwise they are ignored.
pub fn resolve_builtin(id: &str, overrides: &Overrides, strict: bool) -> Result<BackgroundSpec, CatalogError> {
    let accepted = BUILTIN_PARAMS
        .iter()
        .find(|(name, _)| *name == id)
        .map(|(_, p)| *p)
        .ok_or_else(|| CatalogError::UnknownBackground(id.to_string()))?;
    if strict {
        if let Some(p) = overrides.params.keys().find(|p| !accepted.contains(&p.as_str())) {
            return Err(CatalogError::Malformed(format!("background `{id}` has no parameter `{p}`")));
        }
    }
    let mut b = builtins::builtin(id)?;
    let defaults = b.params.clone();
    let p = |name: &str| overrides.params.get(name).or_else(|| defaults.get(name)).cloned().expect("builtins bind their parameters");
    let mut swapped = false;
    let mut matrix_edits = Vec::new();
    let mut nonclosed = false;
    for pert in &overrides.perturbations {
        match pert {
            Perturbation::SwapRadii => swapped = true,
            Perturbation::Matrix { i, j, delta } => matrix_edits.push((*i, *j, delta.clone())),
            Perturbation::NonClosedH => nonclosed = true,
        }
    }
    let unsupported = |what: &Perturbation| CatalogError::Malformed(format!("perturbation `{what}` does not apply to `{id}`"));

    b = match id {
        "ads7xs4" | "ads4xs7" => {
            let r = p("R");
            let (ads_dim, sphere_dim, ads_c, sphere_c, flux_on, f2) = if id == "ads7xs4" {
                (7, 4, -7, 8, 1, 6)
            } else {
                (4, 7, 8, -7, 0, -6)
            };
            let (ads_c, sphere_c) = if swapped { (-sphere_c, -ads_c) } else { (ads_c, sphere_c) };
            let s = |k: i64| &r * &Scalar::from(k);
            builtins::ads_sphere_d11(id, ads_dim, sphere_dim, &s(ads_c), &s(sphere_c), flux_on, &s(f2))?.with_param("R", r.clone())
        }
        "ads5xs5" => builtins::ads5_s5(&p("R"))?,
        "cw11" => {
            let mu = p("mu");
            let mut a = builtins::cw11_matrix(&mu);
            edit(&mut a, &matrix_edits, id)?;
            builtins::cw11_with(&mu, a)?
        }
        "cw10" => {
            let mu = p("mu");
            let base = builtins::cw10(&mu)?;
            let mut a = CwData::diagonal(&vec![-&(&mu * &mu); 8]).matrix().to_vec();
            edit(&mut a, &matrix_edits, id)?;
            BackgroundSpec { geometry: Geometry::cahen_wallach(&CwData::new(a)?, IIB_WAVE_ORIENTATION)?, ..base }
        }
        "ads3xs3" => builtins::so12_so3_background(&p("alpha"), &p("beta"))?,
        _ => b,
    };
    if !matrix_edits.is_empty() && !matches!(id, "cw11" | "cw10") {
        return Err(unsupported(&overrides.perturbations.iter().find(|x| matches!(x, Perturbation::Matrix { .. })).cloned().unwrap()));
    }
    if swapped && !matches!(id, "ads7xs4" | "ads4xs7") {
        return Err(unsupported(&Perturbation::SwapRadii));
    }
    if nonclosed {
        if !matches!(b.geometry, Geometry::Group(_)) {
            return Err(unsupported(&Perturbation::NonClosedH));
        }
        let h = b.fluxes.get("H3").and_then(constant_form).ok_or_else(|| unsupported(&Perturbation::NonClosedH))?;
        let bad = h.add(&KForm::basis(b.geometry.dim(), &[0, 2, 3]));
        b = b.with_constant_flux("H3", &bad);
    }
    if !overrides.perturbations.is_empty() {
        let tags: Vec<String> = overrides.perturbations.iter().map(ToString::to_string).collect();
        b.id = format!("{id} [{}]", tags.join(", "));
    }
    Ok(b)
}

fn edit(a: &mut [Vec<Scalar>], edits: &[(usize, usize, Scalar)], id: &str) -> Result<(), CatalogError> {
    let n = a.len();
    for (i, j, d) in edits {
        if *i > n || *j > n {
            return Err(CatalogError::Malformed(format!("A{i},{j} is outside the {n}x{n} matrix of `{id}`")));
        }
        a[i - 1][j - 1] = &a[i - 1][j - 1] + d;
        if i != j {
            a[j - 1][i - 1] = &a[j - 1][i - 1] + d;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perturbation_syntax() {
        assert_eq!("A11=+1".parse::<Perturbation>().unwrap(), Perturbation::Matrix { i: 1, j: 1, delta: Scalar::one() });
        assert_eq!(
            "A2,10=-1/2".parse::<Perturbation>().unwrap(),
            Perturbation::Matrix { i: 2, j: 10, delta: Scalar::ratio(-1, 2) }
        );
        assert_eq!("swap-radii".parse::<Perturbation>().unwrap(), Perturbation::SwapRadii);
        for bad in ["A1=1", "A01=1", "B11=1", "A11", "A11=x"] {
            assert!(bad.parse::<Perturbation>().is_err(), "{bad}");
        }
    }

    #[test]
    fn every_builtin_resolves_unchanged() {
        for id in builtin_ids() {
            let b = resolve_builtin(id, &Overrides::default(), true).unwrap();
            assert_eq!(b, builtins::builtin(id).unwrap(), "{id}");
        }
    }

    #[test]
    fn strictness() {
        let mut o = Overrides::default();
        o.params.insert("R".into(), Scalar::from(6));
        assert!(resolve_builtin("cw11", &o, true).is_err());
        assert!(resolve_builtin("cw11", &o, false).is_ok());
        assert!(resolve_builtin("nope", &o, false).is_err());
        let o = Overrides { perturbations: vec![Perturbation::SwapRadii], ..Overrides::default() };
        assert!(resolve_builtin("cw11", &o, true).is_err());
    }
}
