use exactnum::{Coeff, Polynomial};
use multilinear::{BiSymTensor, KForm, SymTensor};
use rayon::prelude::*;

use crate::CoordinatePatch;

/// `Γ[k][i][j] = Γ^k_{ij}`.
pub type Christoffel = Vec<Vec<Vec<Polynomial>>>;

fn sum_products<'a>(pairs: impl Iterator<Item = (&'a Polynomial, &'a Polynomial)>) -> Polynomial {
    pairs
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .fold(Polynomial::zero(), |acc, (a, b)| acc.plus(&a.times(b)))
}

/// `Γ^k_{ij} = ½ g^{kl}(∂_i g_{jl} + ∂_j g_{il} − ∂_l g_{ij})`.
pub fn christoffel(p: &CoordinatePatch) -> Christoffel {
    let n = p.dim();
    let g = p.metric();
    let dg: Vec<Vec<Vec<Polynomial>>> =
        (0..n).map(|l| (0..n).map(|i| (0..n).map(|j| p.partial(&g[i][j], l)).collect()).collect()).collect();
    let half = exactnum::Scalar::ratio(1, 2);
    // first kind: Γ_{lij}
    let first: Vec<Vec<Vec<Polynomial>>> = (0..n)
        .map(|l| {
            (0..n)
                .map(|i| (0..n).map(|j| dg[i][j][l].plus(&dg[j][i][l]).minus(&dg[l][i][j]).scale(&half)).collect())
                .collect()
        })
        .collect();
    let inv = p.inverse();
    (0..n)
        .map(|k| {
            (0..n)
                .map(|i| (0..n).map(|j| sum_products((0..n).map(|l| (&inv[k][l], &first[l][i][j])))).collect())
                .collect()
        })
        .collect()
}

/// `R(a,b,c,d) = g(R(∂_a,∂_b)∂_c, ∂_d)` with
/// `R(X,Y) = ∇_X∇_Y − ∇_Y∇_X − ∇_{[X,Y]}`; the round sphere of sectional
/// curvature `K` has `R = K·½ g⊙g`.
pub fn riemann(p: &CoordinatePatch) -> BiSymTensor<Polynomial> {
    let gamma = christoffel(p);
    riemann_from(p, &gamma)
}

pub fn riemann_from(p: &CoordinatePatch, gamma: &Christoffel) -> BiSymTensor<Polynomial> {
    let n = p.dim();
    let g = p.metric();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    // R^m_{cab} for a < b
    let blocks: Vec<Vec<Vec<Polynomial>>> = pairs
        .par_iter()
        .map(|&(a, b)| {
            (0..n)
                .map(|c| {
                    (0..n)
                        .map(|m| {
                            let mut v = p.partial(&gamma[m][b][c], a).minus(&p.partial(&gamma[m][a][c], b));
                            for l in 0..n {
                                if !gamma[l][b][c].is_zero() && !gamma[m][a][l].is_zero() {
                                    v = v.plus(&gamma[l][b][c].times(&gamma[m][a][l]));
                                }
                                if !gamma[l][a][c].is_zero() && !gamma[m][b][l].is_zero() {
                                    v = v.minus(&gamma[l][a][c].times(&gamma[m][b][l]));
                                }
                            }
                            v
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut out = BiSymTensor::zero(n);
    for (&(a, b), upper) in pairs.iter().zip(&blocks) {
        for c in 0..n {
            for d in 0..n {
                let v = sum_products((0..n).map(|m| (&g[d][m], &upper[c][m])));
                if !v.is_zero() {
                    out.set(b, a, c, d, v.negate());
                    out.set(a, b, c, d, v);
                }
            }
        }
    }
    out
}

/// `Ric(b,c) = Σ g^{ad} R(a,b,c,d)`; positive on round spheres.
pub fn ricci_from<C: Coeff>(riem: &BiSymTensor<C>, inverse: &[Vec<C>]) -> SymTensor<C> {
    let n = riem.dim();
    let mut ric = vec![vec![C::zero(); n]; n];
    for b in 0..n {
        for c in b..n {
            let mut acc = C::zero();
            for a in 0..n {
                for d in 0..n {
                    if !inverse[a][d].is_zero() {
                        let r = riem.get(a, b, c, d);
                        if !r.is_zero() {
                            acc = acc.plus(&inverse[a][d].times(r));
                        }
                    }
                }
            }
            ric[c][b] = acc.clone();
            ric[b][c] = acc;
        }
    }
    ric
}

pub fn ricci(p: &CoordinatePatch) -> SymTensor<Polynomial> {
    ricci_from(&riemann(p), p.inverse())
}

pub fn scalar_curvature_from<C: Coeff>(ric: &SymTensor<C>, inverse: &[Vec<C>]) -> C {
    let n = ric.len();
    let mut acc = C::zero();
    for i in 0..n {
        for j in 0..n {
            if !inverse[i][j].is_zero() && !ric[i][j].is_zero() {
                acc = acc.plus(&inverse[i][j].times(&ric[i][j]));
            }
        }
    }
    acc
}

/// First `(λ, μ, ν)` with `∇_λ g_{μν} ≠ 0`.
pub fn metric_compatibility_defect(p: &CoordinatePatch, gamma: &Christoffel) -> Option<[usize; 3]> {
    let n = p.dim();
    let g = p.metric();
    for l in 0..n {
        for m in 0..n {
            for v in 0..n {
                let mut x = p.partial(&g[m][v], l);
                x = x.minus(&sum_products((0..n).map(|r| (&gamma[r][l][m], &g[r][v]))));
                x = x.minus(&sum_products((0..n).map(|r| (&gamma[r][l][v], &g[m][r]))));
                if !x.is_zero() {
                    return Some([l, m, v]);
                }
            }
        }
    }
    None
}

/// `∇_μ ξ_ν + ∇_ν ξ_μ` for a vector field with components `ξ^μ`.
pub fn killing_operator(p: &CoordinatePatch, gamma: &Christoffel, vector: &[Polynomial]) -> SymTensor<Polynomial> {
    let n = p.dim();
    let xi = p.lower(vector);
    let two = exactnum::Scalar::from(2);
    (0..n)
        .map(|m| {
            (0..n)
                .map(|v| {
                    let d = p.partial(&xi[v], m).plus(&p.partial(&xi[m], v));
                    d.minus(&sum_products((0..n).map(|l| (&gamma[l][m][v], &xi[l]))).scale(&two))
                })
                .collect()
        })
        .collect()
}

/// Exterior derivative of a form with coordinate-basis components.
pub fn exterior_derivative(p: &CoordinatePatch, form: &KForm<Polynomial>) -> KForm<Polynomial> {
    let n = p.dim();
    let mut out = KForm::zero(n, form.degree() + 1);
    for (idx, c) in form.indexed_terms() {
        let base: KForm<Polynomial> = KForm::basis(n, &idx);
        for j in 0..n {
            let dc = p.partial(c, j);
            if dc.is_zero() {
                continue;
            }
            let dj: KForm<Polynomial> = KForm::basis(n, &[j]);
            out = out.add(&dj.wedge(&base).scale_by(&dc));
        }
    }
    out
}

/// `∇_μ F = ∂_μ F − Γ^λ_{μν} dx^ν ∧ ι_{∂_λ} F`, one form per coordinate
/// direction.
pub fn covariant_derivative(p: &CoordinatePatch, gamma: &Christoffel, form: &KForm<Polynomial>) -> Vec<KForm<Polynomial>> {
    let n = p.dim();
    let contractions: Vec<KForm<Polynomial>> = (0..n).map(|l| form.interior_basis(l)).collect();
    (0..n)
        .map(|m| {
            let mut out = form.map_coeffs(|c| p.partial(c, m));
            for l in 0..n {
                if contractions[l].is_zero() {
                    continue;
                }
                for v in 0..n {
                    let gl = &gamma[l][m][v];
                    if gl.is_zero() {
                        continue;
                    }
                    let dv: KForm<Polynomial> = KForm::basis(n, &[v]);
                    out = out.sub(&dv.wedge(&contractions[l]).scale_by(gl));
                }
            }
            out
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactnum::Scalar;
    use liealg::CwData;

    fn s(x: i64) -> Scalar {
        Scalar::from(x)
    }

    #[test]
    fn flat_space_has_no_curvature() {
        let p = CoordinatePatch::minkowski(4);
        let gamma = christoffel(&p);
        assert!(gamma.iter().flatten().flatten().all(|x| x.is_zero()));
        assert!(riemann(&p).is_zero());
    }

    #[test]
    fn cw_christoffel_pattern() {
        let data = CwData::diagonal(&[s(-4), s(-1)]);
        let p = CoordinatePatch::cahen_wallach(&data);
        let gamma = christoffel(&p);
        let x1 = p.coordinate(2);
        let x2 = p.coordinate(3);
        // Γ^+_{-i} = A_ij x^j, Γ^i_{--} = −A_ij x^j
        assert_eq!(gamma[0][1][2], x1.scale(&s(-4)));
        assert_eq!(gamma[0][2][1], x1.scale(&s(-4)));
        assert_eq!(gamma[2][1][1], x1.scale(&s(4)));
        assert_eq!(gamma[3][1][1], x2.scale(&s(1)));
        let nonzero = gamma.iter().flatten().flatten().filter(|x| !x.is_zero()).count();
        assert_eq!(nonzero, 6);
        assert!(metric_compatibility_defect(&p, &gamma).is_none());
    }

    #[test]
    fn cw_curvature_is_linear_in_a() {
        let data = CwData::new(vec![vec![s(-4), s(1)], vec![s(1), s(-1)]]).unwrap();
        let p = CoordinatePatch::cahen_wallach(&data);
        let r = riemann(&p);
        assert!(r.symmetry_violation().is_none());
        assert!(r.bianchi_violation().is_none());
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        let v = r.get(a, b, c, d);
                        let lightcone_type = [a, b, c, d].iter().filter(|&&i| i == 1).count() == 2
                            && [a, b, c, d].iter().all(|&i| i != 0);
                        if !lightcone_type {
                            assert!(v.is_zero(), "({a},{b},{c},{d})");
                        }
                    }
                }
            }
        }
        // R(∂₋,∂_i,∂_j,∂₋) = −A_ij
        assert_eq!(r.get(1, 2, 2, 1).as_scalar(), Some(s(4)));
        assert_eq!(r.get(1, 2, 3, 1).as_scalar(), Some(s(-1)));
        let ric = ricci(&p);
        assert_eq!(ric[1][1].as_scalar(), Some(s(5)));
    }

    #[test]
    fn translation_is_killing() {
        let data = CwData::diagonal(&[s(-1), s(-1)]);
        let p = CoordinatePatch::cahen_wallach(&data);
        let gamma = christoffel(&p);
        let mut v = vec![Polynomial::zero(); 4];
        v[1] = Polynomial::one();
        assert!(killing_operator(&p, &gamma, &v).iter().flatten().all(|x| x.is_zero()));
        // a transverse translation is not Killing on a curved wave
        let mut w = vec![Polynomial::zero(); 4];
        w[2] = Polynomial::one();
        assert!(!killing_operator(&p, &gamma, &w).iter().flatten().all(|x| x.is_zero()));
    }

    #[test]
    fn d_squared_is_zero() {
        let data = CwData::diagonal(&[s(-1), s(2)]);
        let p = CoordinatePatch::cahen_wallach(&data);
        let f = KForm::from_terms(4, 1, vec![(vec![1], p.metric()[1][1].clone()), (vec![2], p.coordinate(3))]);
        let df = exterior_derivative(&p, &f);
        assert!(!df.is_zero());
        assert!(exterior_derivative(&p, &df).is_zero());
    }
}
