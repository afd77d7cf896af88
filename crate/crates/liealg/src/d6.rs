use exactnum::{linalg, Scalar};

use crate::extension::{double_extension, skew_blocks};
use crate::{canonical_three_form, LieAlgebra, LieError, MetricLieAlgebra};

/// The five families of six-dimensional lorentzian metric Lie algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum D6Case {
    /// `E^{1,5}`.
    Minkowski,
    /// `E^{1,2} ⊕ so(3)`.
    FlatPlusSo3,
    /// `E³ ⊕ so(1,2)`.
    FlatPlusSo12,
    /// `so(1,2) ⊕ so(3)`.
    So12PlusSo3,
    /// `𝔡(E⁴, ℝ)`.
    DoubleExtension,
}

impl D6Case {
    pub fn label(&self) -> &'static str {
        match self {
            D6Case::Minkowski => "E^{1,5}",
            D6Case::FlatPlusSo3 => "E^{1,2}+so(3)",
            D6Case::FlatPlusSo12 => "E^3+so(1,2)",
            D6Case::So12PlusSo3 => "so(1,2)+so(3)",
            D6Case::DoubleExtension => "d(E^4,R)",
        }
    }
}

#[derive(Clone, Debug)]
pub struct D6Entry {
    pub case: D6Case,
    pub algebra: MetricLieAlgebra,
}

fn s(x: i64) -> Scalar {
    Scalar::from(x)
}

fn diag(entries: &[Scalar]) -> Vec<Vec<Scalar>> {
    let n = entries.len();
    (0..n).map(|i| (0..n).map(|j| if i == j { entries[i].clone() } else { Scalar::zero() }).collect()).collect()
}

/// `so(1,2)`: `[e₀,e₁] = −e₂`, `[e₀,e₂] = e₁`, `[e₁,e₂] = e₀`.
pub fn so12() -> LieAlgebra {
    LieAlgebra::from_brackets(3, &[(0, 1, vec![(2, s(-1))]), (0, 2, vec![(1, s(1))]), (1, 2, vec![(0, s(1))])])
        .expect("so(1,2) brackets are consistent")
}

/// `so(3)` in the basis `e₃, e₄, e₅`: `[e₅,e₃] = −e₄`, `[e₅,e₄] = e₃`,
/// `[e₃,e₄] = −e₅`.
pub fn so3() -> LieAlgebra {
    LieAlgebra::from_brackets(3, &[(2, 0, vec![(1, s(-1))]), (2, 1, vec![(0, s(1))]), (0, 1, vec![(2, s(-1))])])
        .expect("so(3) brackets are consistent")
}

pub fn e15() -> MetricLieAlgebra {
    let mut m = vec![s(-1)];
    m.extend(vec![s(1); 5]);
    MetricLieAlgebra::new("e15", LieAlgebra::abelian(6), diag(&m)).expect("minkowski metric")
}

/// `so(1,2) ⊕ so(3)` with scalar product `diag(−α, α, α, β, β, β)`.
pub fn so12_so3(alpha: &Scalar, beta: &Scalar) -> Result<MetricLieAlgebra, LieError> {
    let metric = diag(&[-alpha, alpha.clone(), alpha.clone(), beta.clone(), beta.clone(), beta.clone()]);
    let name = if alpha == beta { format!("so12+so3({alpha})") } else { format!("so12+so3({alpha},{beta})") };
    MetricLieAlgebra::new(name, so12().direct_sum(&so3()), metric)
}

/// `𝔡(E⁴, ℝ)` with `ρ(e₋) = α e₁∧e₂ + β e₃∧e₄` and `⟨e₋, e₋⟩ = b`.
/// Basis `e₊, e₋, e₁, …, e₄`.
pub fn d_e4(alpha: &Scalar, beta: &Scalar, b: &Scalar) -> Result<MetricLieAlgebra, LieError> {
    let base = MetricLieAlgebra::new("E4", LieAlgebra::abelian(4), linalg::identity(4))?;
    let name = format!("d(E4;{alpha},{beta})");
    double_extension(&base, &skew_blocks(&[alpha.clone(), beta.clone()]), b.clone())?.with_name(name).with_orientation(-1)
}

/// The six-dimensional Nappi–Witten type algebra, `α = β = 1`, `b = 0`.
pub fn nw6() -> MetricLieAlgebra {
    d_e4(&s(1), &s(1), &s(0)).expect("nw6 is a valid double extension").with_name("nw6")
}

fn flat_plus(flat: &[i64], simple: LieAlgebra, simple_metric: &[i64], name: &str) -> MetricLieAlgebra {
    let k = flat.len();
    let mut m: Vec<Scalar> = flat.iter().map(|&x| s(x)).collect();
    m.extend(simple_metric.iter().map(|&x| s(x)));
    MetricLieAlgebra::new(name, LieAlgebra::abelian(k).direct_sum(&simple), diag(&m)).expect("product metric")
}

/// Representatives of the five families, at unit parameters.
pub fn d6_catalog() -> Vec<D6Entry> {
    vec![
        D6Entry { case: D6Case::Minkowski, algebra: e15() },
        D6Entry { case: D6Case::FlatPlusSo3, algebra: flat_plus(&[-1, 1, 1], so3(), &[1, 1, 1], "e12+so3") },
        D6Entry { case: D6Case::FlatPlusSo12, algebra: flat_plus(&[1, 1, 1], so12(), &[-1, 1, 1], "e3+so12") },
        D6Entry { case: D6Case::So12PlusSo3, algebra: so12_so3(&s(1), &s(1)).expect("unit parameters") },
        D6Entry { case: D6Case::DoubleExtension, algebra: nw6() },
    ]
}

/// `⋆H = −H` for the canonical 3-form.
pub fn is_anti_selfdual(g: &MetricLieAlgebra) -> Result<bool, LieError> {
    let h = canonical_three_form(g)?;
    Ok(h.hodge(g.space()) == h.neg())
}

/// Keeps the catalog entries whose canonical 3-form is anti-selfdual for
/// some orientation.
pub fn anti_selfdual_filter(entries: &[D6Entry]) -> Result<Vec<D6Entry>, LieError> {
    let mut out = Vec::new();
    for e in entries {
        let flipped = e.algebra.clone().with_orientation(-e.algebra.space().orientation())?;
        if is_anti_selfdual(&e.algebra)? || is_anti_selfdual(&flipped)? {
            out.push(e.clone());
        }
    }
    Ok(out)
}

/// Looks up `e15`, `nw6`, `so12+so3(a)`, `so12+so3(a,b)`, `d(E4;a,b)` or
/// `d2n2(λ₁,…)`.
pub fn algebra_by_id(id: &str) -> Result<MetricLieAlgebra, LieError> {
    let unknown = || LieError::UnknownId(id.to_string());
    let args = |inner: &str| -> Result<Vec<Scalar>, LieError> {
        inner.split(',').map(|t| t.trim().parse::<Scalar>().map_err(|_| unknown())).collect()
    };
    let call = |prefix: &str| -> Option<&str> { id.strip_prefix(prefix).and_then(|r| r.strip_suffix(')')) };
    match id {
        "e15" => return Ok(e15()),
        "nw6" => return Ok(nw6()),
        "so12+so3" => return so12_so3(&s(1), &s(1)),
        _ => {}
    }
    if let Some(inner) = call("so12+so3(") {
        let v = args(inner)?;
        return match v.as_slice() {
            [a] => so12_so3(a, a),
            [a, b] => so12_so3(a, b),
            _ => Err(unknown()),
        };
    }
    if let Some(inner) = call("d(E4;") {
        let v = args(inner)?;
        return match v.as_slice() {
            [a, b] => d_e4(a, b, &s(0)),
            _ => Err(unknown()),
        };
    }
    if let Some(inner) = call("d2n2(") {
        return crate::d2n2(&args(inner)?);
    }
    Err(unknown())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_valid() {
        for e in d6_catalog() {
            assert!(e.algebra.jacobi_check().is_ok(), "{}", e.algebra.name());
            assert!(e.algebra.invariance_check().is_ok(), "{}", e.algebra.name());
            assert_eq!(e.algebra.signature(), (1, 5), "{}", e.algebra.name());
        }
    }

    #[test]
    fn filter_discards_cases_two_and_three() {
        let kept: Vec<D6Case> = anti_selfdual_filter(&d6_catalog()).unwrap().iter().map(|e| e.case).collect();
        assert_eq!(kept, vec![D6Case::Minkowski, D6Case::So12PlusSo3, D6Case::DoubleExtension]);
    }

    #[test]
    fn anti_selfduality_iff_equal_parameters() {
        assert!(is_anti_selfdual(&nw6()).unwrap());
        assert!(is_anti_selfdual(&so12_so3(&s(1), &s(1)).unwrap()).unwrap());
        assert!(is_anti_selfdual(&so12_so3(&s(3), &s(3)).unwrap()).unwrap());
        assert!(!is_anti_selfdual(&so12_so3(&s(1), &s(2)).unwrap()).unwrap());
        assert!(is_anti_selfdual(&d_e4(&s(2), &s(2), &s(0)).unwrap()).unwrap());
        assert!(!is_anti_selfdual(&d_e4(&s(1), &s(2), &s(0)).unwrap()).unwrap());
    }

    #[test]
    fn ids() {
        assert_eq!(algebra_by_id("nw6").unwrap().name(), "nw6");
        assert_eq!(algebra_by_id("so12+so3(2)").unwrap().metric()[0][0], s(-2));
        assert_eq!(algebra_by_id("d2n2(1/2,1)").unwrap().dim(), 6);
        assert!(matches!(algebra_by_id("sl3"), Err(LieError::UnknownId(_))));
    }
}
