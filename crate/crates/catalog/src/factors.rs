use std::fmt;

use exactnum::Scalar;
use liealg::{canonical_three_form, ce_differential, d2n2, so12, so3, LieAlgebra, MetricLieAlgebra};
use serde::{Deserialize, Serialize};

use crate::CatalogError;

/// The building blocks of parallelisable spacetimes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FactorKind {
    Ads3,
    /// `E^{1,0}`, the time line.
    TimeLine,
    /// `CW_{2n}(A)`, stored by `n ≥ 2`.
    Cw(usize),
    S3,
    S7,
    Su3,
    /// `E^{0,1}`.
    Line,
}

impl FactorKind {
    pub fn dim(self) -> usize {
        match self {
            FactorKind::Ads3 | FactorKind::S3 => 3,
            FactorKind::TimeLine | FactorKind::Line => 1,
            FactorKind::Cw(n) => 2 * n,
            FactorKind::S7 => 7,
            FactorKind::Su3 => 8,
        }
    }

    pub fn is_lorentzian(self) -> bool {
        matches!(self, FactorKind::Ads3 | FactorKind::TimeLine | FactorKind::Cw(_))
    }

    pub fn name(self) -> String {
        match self {
            FactorKind::Ads3 => "AdS3".into(),
            FactorKind::TimeLine => "E^{1,0}".into(),
            FactorKind::Cw(n) => format!("CW{}(A)", 2 * n),
            FactorKind::S3 => "S3".into(),
            FactorKind::S7 => "S7".into(),
            FactorKind::Su3 => "SU(3)".into(),
            FactorKind::Line => "E^{0,1}".into(),
        }
    }

    /// The riemannian factors, in canonical order.
    pub fn riemannian() -> [FactorKind; 4] {
        [FactorKind::S3, FactorKind::S7, FactorKind::Su3, FactorKind::Line]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TorsionClass {
    /// `dH = 0`, `|H|² < 0`.
    ClosedNegative,
    /// `H = 0`.
    Zero,
    /// `dH = 0`, `|H|² > 0`.
    ClosedPositive,
    /// `dH ≠ 0`, `|H|² > 0`.
    NotClosedPositive,
    /// `dH = 0`, `|H|² = 0`.
    ClosedNull,
}

impl TorsionClass {
    pub fn is_closed(self) -> bool {
        self != TorsionClass::NotClosedPositive
    }
}

impl fmt::Display for TorsionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TorsionClass::ClosedNegative => "dH=0  |H|^2 < 0",
            TorsionClass::Zero => "H=0",
            TorsionClass::ClosedPositive => "dH=0  |H|^2 > 0",
            TorsionClass::NotClosedPositive => "dH!=0 |H|^2 > 0",
            TorsionClass::ClosedNull => "dH=0  |H|^2 = 0",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DilatonFreedom {
    Constant,
    Unconstrained,
    /// `φ(x⁻)`: the gradient is dual to the null center.
    AlongNull,
}

impl fmt::Display for DilatonFreedom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DilatonFreedom::Constant => "constant",
            DilatonFreedom::Unconstrained => "unconstrained",
            DilatonFreedom::AlongNull => "phi(x^-)",
        })
    }
}

/// One row of the table of elementary parallelisable geometries.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ElementaryFactor {
    pub kind: FactorKind,
    pub name: String,
    pub dim: usize,
    pub lorentzian: bool,
    pub torsion: TorsionClass,
    pub dilaton: DilatonFreedom,
    /// Whether the row was computed from a Lie algebra or declared.
    pub computed: bool,
}

fn diag(entries: &[Scalar]) -> Vec<Vec<Scalar>> {
    let n = entries.len();
    (0..n).map(|i| (0..n).map(|j| if i == j { entries[i].clone() } else { Scalar::zero() }).collect()).collect()
}

/// Structure constants `[e_i, e_j] = Σ c_k e_k`, keyed by `i < j`.
type Brackets = Vec<(usize, usize, Vec<(usize, Scalar)>)>;

/// Gell-Mann structure constants: `[T_a, T_b] = f_abc T_c`.
pub fn su3() -> LieAlgebra {
    let half = Scalar::ratio(1, 2);
    let r3 = &Scalar::sqrt_int(3) * &half;
    let f: Vec<([usize; 3], Scalar)> = vec![
        ([0, 1, 2], Scalar::one()),
        ([0, 3, 6], half.clone()),
        ([0, 4, 5], -&half),
        ([1, 3, 5], half.clone()),
        ([1, 4, 6], half.clone()),
        ([2, 3, 4], half.clone()),
        ([2, 5, 6], -&half),
        ([3, 4, 7], r3.clone()),
        ([5, 6, 7], r3),
    ];
    let mut brackets: Brackets = Vec::new();
    let mut push = |i: usize, j: usize, k: usize, v: Scalar| {
        let (i, j, v) = if i < j { (i, j, v) } else { (j, i, -&v) };
        if let Some(entry) = brackets.iter_mut().find(|(a, b, _)| *a == i && *b == j) {
            entry.2.push((k, v));
        } else {
            brackets.push((i, j, vec![(k, v)]));
        }
    };
    for ([a, b, c], v) in &f {
        push(*a, *b, *c, v.clone());
        push(*b, *c, *a, v.clone());
        push(*c, *a, *b, v.clone());
    }
    LieAlgebra::from_brackets(8, &brackets).expect("su(3) structure constants are consistent")
}

/// A group realising `kind` with its bi-invariant metric scaled by `scale`
/// (`R² = 4·scale` for the round factors). `S⁷` is not a group.
pub fn realization(kind: FactorKind, scale: &Scalar) -> Result<MetricLieAlgebra, CatalogError> {
    let g = match kind {
        FactorKind::Ads3 => MetricLieAlgebra::new("ads3", so12(), diag(&[-scale, scale.clone(), scale.clone()]))?,
        FactorKind::S3 => MetricLieAlgebra::new("s3", so3(), diag(&[scale.clone(), scale.clone(), scale.clone()]))?,
        FactorKind::Su3 => MetricLieAlgebra::new("su3", su3(), diag(&vec![scale.clone(); 8]))?,
        FactorKind::TimeLine => MetricLieAlgebra::new("t", LieAlgebra::abelian(1), vec![vec![-scale]])?,
        FactorKind::Line => MetricLieAlgebra::new("y", LieAlgebra::abelian(1), vec![vec![scale.clone()]])?,
        FactorKind::Cw(n) => {
            // skew eigenvalues 1, 2, 4, …: no signed sum vanishes
            let lambdas: Vec<Scalar> = (0..n - 1).map(|k| scale * &Scalar::from(1i64 << k)).collect();
            d2n2(&lambdas)?.with_name(format!("cw{}", 2 * n))
        }
        FactorKind::S7 => {
            return Err(CatalogError::NotAGroup("S7 is parallelised by octonions, not a Lie group".into()));
        }
    };
    g.invariance_check()?;
    Ok(g)
}

fn classify(kind: FactorKind) -> Result<(TorsionClass, DilatonFreedom), CatalogError> {
    let g = realization(kind, &Scalar::one())?;
    let h = canonical_three_form(&g)?;
    let torsion = if h.is_zero() {
        TorsionClass::Zero
    } else if !ce_differential(g.algebra(), &h).is_zero() {
        TorsionClass::NotClosedPositive
    } else {
        match h.norm_squared(g.space()).signum() {
            -1 => TorsionClass::ClosedNegative,
            1 => TorsionClass::ClosedPositive,
            _ => TorsionClass::ClosedNull,
        }
    };
    // ∇dφ = 0 and dφ∧⋆H = 0 force dφ to be dual to a central element
    let center = g.algebra().center()?;
    let dilaton = if center.len() == g.dim() {
        DilatonFreedom::Unconstrained
    } else if center.is_empty() {
        DilatonFreedom::Constant
    } else if center.iter().all(|z| g.pair(z, z).is_zero()) {
        DilatonFreedom::AlongNull
    } else {
        return Err(CatalogError::Unsupported(format!("{} has a non-null center", kind.name())));
    };
    Ok((torsion, dilaton))
}

impl ElementaryFactor {
    pub fn new(kind: FactorKind) -> Result<Self, CatalogError> {
        let (torsion, dilaton, computed) = match kind {
            // the octonionic parallelism has dH ≠ 0; ⋆H∧dφ = 0 forces dφ = 0
            FactorKind::S7 => (TorsionClass::NotClosedPositive, DilatonFreedom::Constant, false),
            _ => {
                let (t, d) = classify(kind)?;
                (t, d, true)
            }
        };
        Ok(ElementaryFactor { kind, name: kind.name(), dim: kind.dim(), lorentzian: kind.is_lorentzian(), torsion, dilaton, computed })
    }
}

/// The elementary geometries, with `CW_{2n}(A)` represented by `n = 2`.
pub fn elementary_factors() -> Result<Vec<ElementaryFactor>, CatalogError> {
    [
        FactorKind::Ads3,
        FactorKind::TimeLine,
        FactorKind::Line,
        FactorKind::S3,
        FactorKind::S7,
        FactorKind::Su3,
        FactorKind::Cw(2),
    ]
    .into_iter()
    .map(ElementaryFactor::new)
    .collect()
}
