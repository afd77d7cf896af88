use std::fmt;

use serde::{Deserialize, Serialize};

use crate::factors::FactorKind;
use crate::CatalogError;

/// A product of elementary factors with exactly one lorentzian factor.
/// Factors are kept in canonical order: the lorentzian factor, spheres by
/// dimension, `SU(3)`, then flat lines.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GeometryProduct {
    factors: Vec<FactorKind>,
}

impl GeometryProduct {
    pub fn new(mut factors: Vec<FactorKind>) -> Result<Self, CatalogError> {
        let lorentzian = factors.iter().filter(|f| f.is_lorentzian()).count();
        if lorentzian != 1 {
            return Err(CatalogError::Unsupported(format!("{lorentzian} lorentzian factors; exactly one is required")));
        }
        if factors.iter().any(|f| matches!(f, FactorKind::Cw(n) if *n < 2)) {
            return Err(CatalogError::Unsupported("CW factors have dimension at least 4".into()));
        }
        factors.sort_by_key(|f| (!f.is_lorentzian(), *f));
        Ok(GeometryProduct { factors })
    }

    pub fn factors(&self) -> &[FactorKind] {
        &self.factors
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim()).sum()
    }

    pub fn count(&self, kind: FactorKind) -> usize {
        self.factors.iter().filter(|&&f| f == kind).count()
    }

    pub fn contains(&self, kind: FactorKind) -> bool {
        self.count(kind) > 0
    }

    pub fn lorentzian(&self) -> FactorKind {
        self.factors[0]
    }

    /// Spacelike flat directions.
    pub fn flat_lines(&self) -> usize {
        self.count(FactorKind::Line)
    }

    pub fn has_cw(&self) -> bool {
        matches!(self.lorentzian(), FactorKind::Cw(_))
    }

    /// Canonical name, e.g. `CW4(A) x S3 x E^3` or `E^{1,1} x SU(3)`.
    pub fn name(&self) -> String {
        let flats = self.flat_lines();
        let mut parts = Vec::new();
        match self.lorentzian() {
            FactorKind::TimeLine => parts.push(format!("E^{{1,{flats}}}")),
            other => parts.push(other.name()),
        }
        for f in &self.factors[1..] {
            if *f != FactorKind::Line {
                parts.push(f.name());
            }
        }
        if self.lorentzian() != FactorKind::TimeLine {
            match flats {
                0 => {}
                1 => parts.push("E".into()),
                k => parts.push(format!("E^{k}")),
            }
        }
        parts.join(" x ")
    }

    /// Parses a canonical name.
    pub fn parse(name: &str) -> Result<Self, CatalogError> {
        let bad = || CatalogError::UnknownGeometry(name.to_string());
        let mut factors = Vec::new();
        for part in name.split(" x ").map(str::trim) {
            match part {
                "AdS3" => factors.push(FactorKind::Ads3),
                "S3" => factors.push(FactorKind::S3),
                "S7" => factors.push(FactorKind::S7),
                "SU(3)" => factors.push(FactorKind::Su3),
                "E" => factors.push(FactorKind::Line),
                _ => {
                    if let Some(k) = part.strip_prefix("E^{1,").and_then(|r| r.strip_suffix('}')) {
                        factors.push(FactorKind::TimeLine);
                        factors.extend(std::iter::repeat_n(FactorKind::Line, k.parse().map_err(|_| bad())?));
                    } else if let Some(k) = part.strip_prefix("E^") {
                        factors.extend(std::iter::repeat_n(FactorKind::Line, k.parse().map_err(|_| bad())?));
                    } else if let Some(d) = part.strip_prefix("CW").and_then(|r| r.strip_suffix("(A)")) {
                        let d: usize = d.parse().map_err(|_| bad())?;
                        if !d.is_multiple_of(2) {
                            return Err(bad());
                        }
                        factors.push(FactorKind::Cw(d / 2));
                    } else {
                        return Err(bad());
                    }
                }
            }
        }
        GeometryProduct::new(factors)
    }
}

impl fmt::Display for GeometryProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn riemannian_fillings(budget: usize, from: usize, acc: &mut Vec<FactorKind>, out: &mut Vec<Vec<FactorKind>>) {
    if budget == 0 {
        out.push(acc.clone());
        return;
    }
    let kinds = FactorKind::riemannian();
    for (i, &k) in kinds.iter().enumerate().skip(from) {
        if k.dim() <= budget {
            acc.push(k);
            riemannian_fillings(budget - k.dim(), i, acc, out);
            acc.pop();
        }
    }
}

/// Every product of elementary factors of total dimension `total_dim` with
/// one lorentzian factor.
pub fn enumerate_parallelisable(total_dim: usize) -> Vec<GeometryProduct> {
    let mut lorentzian = vec![FactorKind::Ads3, FactorKind::TimeLine];
    lorentzian.extend((2..=total_dim / 2).rev().map(FactorKind::Cw));
    let mut out = Vec::new();
    for l in lorentzian {
        if l.dim() > total_dim {
            continue;
        }
        let mut fillings = Vec::new();
        riemannian_fillings(total_dim - l.dim(), 0, &mut Vec::new(), &mut fillings);
        for filling in fillings {
            let mut factors = vec![l];
            factors.extend(filling);
            out.push(GeometryProduct::new(factors).expect("one lorentzian factor"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for g in enumerate_parallelisable(10) {
            assert_eq!(GeometryProduct::parse(&g.name()).unwrap(), g);
        }
    }

    #[test]
    fn two_lorentzian_factors_are_rejected() {
        assert!(GeometryProduct::new(vec![FactorKind::Ads3, FactorKind::TimeLine]).is_err());
        assert!(GeometryProduct::parse("S3 x S7").is_err());
    }

    #[test]
    fn small_dimensions() {
        let names: Vec<String> = enumerate_parallelisable(4).iter().map(GeometryProduct::name).collect();
        assert_eq!(names, ["AdS3 x E", "E^{1,0} x S3", "E^{1,3}", "CW4(A)"]);
    }
}
