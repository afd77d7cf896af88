use exactnum::Scalar;
use multilinear::{mask_indices, KForm, SymTensor};

use crate::{LieAlgebra, LieError, MetricLieAlgebra};

/// The bi-invariant 3-form `H(e_i, e_j, e_k) = B([e_i, e_j], e_k)`.
pub fn canonical_three_form(g: &MetricLieAlgebra) -> Result<KForm<Scalar>, LieError> {
    g.invariance_check()?;
    let n = g.dim();
    let metric = g.metric();
    let mut terms = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let br = g.algebra().bracket_basis(i, j);
            for k in j + 1..n {
                let v: Scalar = br.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(m, x)| x * &metric[m][k]).sum();
                if !v.is_zero() {
                    terms.push((vec![i, j, k], v));
                }
            }
        }
    }
    Ok(KForm::from_terms(n, 3, terms))
}

/// `d e^k = −Σ_{i<j} c^k_{ij} e^i ∧ e^j`.
fn differential_of_basis(g: &LieAlgebra, k: usize) -> KForm<Scalar> {
    let n = g.dim();
    let mut terms = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let c = g.structure_constant(i, j, k);
            if !c.is_zero() {
                terms.push((vec![i, j], -c));
            }
        }
    }
    KForm::from_terms(n, 2, terms)
}

/// Chevalley–Eilenberg differential on left-invariant forms with constant
/// coefficients, extended from `d e^k` as an antiderivation.
pub fn ce_differential(g: &LieAlgebra, omega: &KForm<Scalar>) -> KForm<Scalar> {
    let n = g.dim();
    let basic: Vec<KForm<Scalar>> = (0..n).map(|k| differential_of_basis(g, k)).collect();
    let mut out = KForm::zero(n, omega.degree() + 1);
    for (mask, c) in omega.terms() {
        let idx = mask_indices(mask);
        for p in 0..idx.len() {
            if basic[idx[p]].is_zero() {
                continue;
            }
            let prefix: KForm<Scalar> = KForm::basis(n, &idx[..p]);
            let suffix: KForm<Scalar> = KForm::basis(n, &idx[p + 1..]);
            let mut term = prefix.wedge(&basic[idx[p]]).wedge(&suffix).scale(c);
            if p % 2 == 1 {
                term = term.neg();
            }
            out = out.add(&term);
        }
    }
    out
}

/// Ricci tensor of the bi-invariant metric: `Ric(X, Y) = −¼ tr(ad_X ∘ ad_Y)`.
/// Positive on compact simple factors.
pub fn biinvariant_ricci(g: &MetricLieAlgebra) -> Result<SymTensor<Scalar>, LieError> {
    g.invariance_check()?;
    let n = g.dim();
    let alg = g.algebra();
    let ads: Vec<Vec<Vec<Scalar>>> = (0..n)
        .map(|i| {
            let mut e = vec![Scalar::zero(); n];
            e[i] = Scalar::one();
            alg.ad(&e)
        })
        .collect();
    let quarter = Scalar::ratio(-1, 4);
    let mut ric = vec![vec![Scalar::zero(); n]; n];
    for a in 0..n {
        for b in a..n {
            let mut tr = Scalar::zero();
            for i in 0..n {
                for k in 0..n {
                    if !ads[a][i][k].is_zero() && !ads[b][k][i].is_zero() {
                        tr += &(&ads[a][i][k] * &ads[b][k][i]);
                    }
                }
            }
            let v = &tr * &quarter;
            ric[a][b] = v.clone();
            ric[b][a] = v;
        }
    }
    Ok(ric)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::d2n2;
    use exactnum::linalg;

    fn s(x: i64) -> Scalar {
        Scalar::from(x)
    }

    fn so3() -> LieAlgebra {
        LieAlgebra::from_brackets(3, &[(0, 1, vec![(2, s(1))]), (1, 2, vec![(0, s(1))]), (2, 0, vec![(1, s(1))])])
            .unwrap()
    }

    #[test]
    fn maurer_cartan_on_so3() {
        let g = so3();
        let d = ce_differential(&g, &KForm::basis(3, &[0]));
        assert_eq!(d, KForm::basis(3, &[1, 2]).neg());
    }

    #[test]
    fn d_squared_vanishes() {
        let g = d2n2(&[s(1), s(2)]).unwrap();
        for i in 0..6 {
            let one: KForm<Scalar> = KForm::basis(6, &[i]);
            let dd = ce_differential(g.algebra(), &ce_differential(g.algebra(), &one));
            assert!(dd.is_zero());
        }
    }

    #[test]
    fn canonical_form_closed_and_nw6_values() {
        let g = d2n2(&[s(1), s(1)]).unwrap();
        let h = canonical_three_form(&g).unwrap();
        assert_eq!(h.get(&[1, 2, 3]), s(1));
        assert_eq!(h.get(&[1, 4, 5]), s(1));
        assert_eq!(h.num_terms(), 2);
        assert!(ce_differential(g.algebra(), &h).is_zero());
    }

    #[test]
    fn ricci_values() {
        let so3 = MetricLieAlgebra::new("so3", so3(), linalg::identity(3)).unwrap();
        let ric = biinvariant_ricci(&so3).unwrap();
        assert_eq!(ric, vec![vec![Scalar::ratio(1, 2), s(0), s(0)], vec![s(0), Scalar::ratio(1, 2), s(0)], vec![s(0), s(0), Scalar::ratio(1, 2)]]);
        let nw6 = d2n2(&[s(1), s(1)]).unwrap();
        let ric = biinvariant_ricci(&nw6).unwrap();
        for a in 0..6 {
            for b in 0..6 {
                let expected = if a == 1 && b == 1 { s(1) } else { s(0) };
                assert_eq!(ric[a][b], expected, "({a},{b})");
            }
        }
    }
}
