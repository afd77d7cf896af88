use exactnum::{Coeff, Polynomial, Scalar};
use liealg::{ce_differential, MetricLieAlgebra};
use multilinear::{BiSymTensor, KForm};

use crate::curvature::{covariant_derivative, exterior_derivative, riemann_from, Christoffel};
use crate::{christoffel, CoordinatePatch, GeometryError};

/// `T[a][b][ν]`: components of the vector `T(e_a, e_b)` defined by
/// `g(T(X,Y),Z) = H(X,Y,Z)`.
fn torsion_vectors<C: Coeff>(h: &KForm<C>, inverse: &[Vec<C>]) -> Vec<Vec<Vec<C>>> {
    let n = h.dim();
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let lower: Vec<C> = (0..n).map(|m| h.get(&[a, b, m])).collect();
                    (0..n)
                        .map(|v| {
                            (0..n)
                                .filter(|&m| !lower[m].is_zero() && !inverse[v][m].is_zero())
                                .fold(C::zero(), |acc, m| acc.plus(&inverse[v][m].times(&lower[m])))
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// `g(T(a,d), T(b,c)) = Σ_ν T(a,d)^ν H(b,c,ν)`.
fn tt<C: Coeff>(t: &[Vec<Vec<C>>], h: &KForm<C>, a: usize, d: usize, b: usize, c: usize) -> C {
    t[a][d]
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .fold(C::zero(), |acc, (v, x)| {
            let y = h.get(&[b, c, v]);
            if y.is_zero() {
                acc
            } else {
                acc.plus(&x.times(&y))
            }
        })
}

/// The linear and quadratic torsion corrections, kept apart so a scale
/// factor on `H` can be solved for.
struct Corrections<C> {
    linear: BiSymTensor<C>,
    quadratic: BiSymTensor<C>,
}

fn corrections<C: Coeff>(h: &KForm<C>, nabla_h: &[KForm<C>], inverse: &[Vec<C>]) -> Corrections<C> {
    let n = h.dim();
    let t = torsion_vectors(h, inverse);
    let half = Scalar::ratio(1, 2);
    let quarter = Scalar::ratio(1, 4);
    let linear = BiSymTensor::from_fn(n, |a, b, c, d| {
        nabla_h[a].get(&[b, c, d]).minus(&nabla_h[b].get(&[a, c, d])).scale(&half)
    });
    let quadratic = BiSymTensor::from_fn(n, |a, b, c, d| tt(&t, h, b, d, a, c).minus(&tt(&t, h, a, d, b, c)).scale(&quarter));
    Corrections { linear, quadratic }
}

fn first_term(form: &KForm<Polynomial>) -> Option<(Vec<usize>, String)> {
    form.indexed_terms().next().map(|(i, c)| (i, c.to_string()))
}

fn ensure_closed_poly(p: &CoordinatePatch, h: &KForm<Polynomial>) -> Result<(), GeometryError> {
    match first_term(&exterior_derivative(p, h)) {
        None => Ok(()),
        Some((indices, component)) => Err(GeometryError::NotClosed { indices, component }),
    }
}

fn ensure_closed_group(g: &MetricLieAlgebra, h: &KForm<Scalar>) -> Result<(), GeometryError> {
    let dh = ce_differential(g.algebra(), h);
    let first = dh.indexed_terms().next().map(|(i, c)| (i, c.to_string()));
    match first {
        None => Ok(()),
        Some((indices, component)) => Err(GeometryError::NotClosed { indices, component }),
    }
}

/// `R^D(a,b,c,d) = R(a,b,c,d) + ½(∇_aH)(b,c,d) − ½(∇_bH)(a,c,d)
/// − ¼ g(T(a,d),T(b,c)) + ¼ g(T(b,d),T(a,c))` for `D = ∇ + ½T`, with the
/// same sign conventions as [`crate::riemann`].
pub fn curvature_with_torsion(p: &CoordinatePatch, h: &KForm<Polynomial>) -> Result<BiSymTensor<Polynomial>, GeometryError> {
    ensure_closed_poly(p, h)?;
    let gamma = christoffel(p);
    let c = patch_corrections(p, &gamma, h);
    Ok(riemann_from(p, &gamma).add(&c.linear).add(&c.quadratic))
}

fn patch_corrections(p: &CoordinatePatch, gamma: &Christoffel, h: &KForm<Polynomial>) -> Corrections<Polynomial> {
    let nabla = covariant_derivative(p, gamma, h);
    corrections(h, &nabla, p.inverse())
}

/// `R(X,Y)Z = −¼[[X,Y],Z]` for the bi-invariant metric.
pub fn group_riemann(g: &MetricLieAlgebra) -> BiSymTensor<Scalar> {
    let n = g.dim();
    let alg = g.algebra();
    let quarter = Scalar::ratio(-1, 4);
    let xy: Vec<Vec<Vec<Scalar>>> =
        (0..n).map(|a| (0..n).map(|b| alg.bracket_basis(a, b).to_vec()).collect()).collect();
    BiSymTensor::from_fn(n, |a, b, c, d| {
        let mut ec = vec![Scalar::zero(); n];
        ec[c] = Scalar::one();
        let z = alg.bracket(&xy[a][b], &ec);
        let mut ed = vec![Scalar::zero(); n];
        ed[d] = Scalar::one();
        &g.pair(&z, &ed) * &quarter
    })
}

/// `(∇_aH)(b,c,d) = −½(H([a,b],c,d) + H(b,[a,c],d) + H(b,c,[a,d]))` for
/// the Levi-Civitá connection `∇_XY = ½[X,Y]`.
fn group_nabla(g: &MetricLieAlgebra, h: &KForm<Scalar>) -> Vec<KForm<Scalar>> {
    let n = g.dim();
    let alg = g.algebra();
    let minus_half = Scalar::ratio(-1, 2);
    let eval = |slots: [&[Scalar]; 3]| -> Scalar {
        // H on one bracket vector and two basis vectors
        let mut acc = Scalar::zero();
        let expand = |v: &[Scalar]| -> Vec<(usize, Scalar)> {
            v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
        };
        for (i, x) in expand(slots[0]) {
            for (j, y) in expand(slots[1]) {
                for (k, z) in expand(slots[2]) {
                    let v = h.get(&[i, j, k]);
                    if !v.is_zero() {
                        acc += &(&(&x * &y) * &(&z * &v));
                    }
                }
            }
        }
        acc
    };
    let unit = |i: usize| -> Vec<Scalar> {
        let mut e = vec![Scalar::zero(); n];
        e[i] = Scalar::one();
        e
    };
    (0..n)
        .map(|a| {
            let mut terms = Vec::new();
            for b in 0..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let (eb, ec, ed) = (unit(b), unit(c), unit(d));
                        let ab = alg.bracket_basis(a, b);
                        let ac = alg.bracket_basis(a, c);
                        let ad = alg.bracket_basis(a, d);
                        let v = &(&(&eval([ab, &ec, &ed]) + &eval([&eb, ac, &ed])) + &eval([&eb, &ec, ad])) * &minus_half;
                        if !v.is_zero() {
                            terms.push((vec![b, c, d], v));
                        }
                    }
                }
            }
            KForm::from_terms(n, 3, terms)
        })
        .collect()
}

/// `R^D` on a Lie group with bi-invariant metric and closed `H`.
pub fn group_curvature_with_torsion(g: &MetricLieAlgebra, h: &KForm<Scalar>) -> Result<BiSymTensor<Scalar>, GeometryError> {
    ensure_closed_group(g, h)?;
    let nabla = group_nabla(g, h);
    let c = corrections(h, &nabla, g.space().inverse_metric());
    Ok(group_riemann(g).add(&c.linear).add(&c.quadratic))
}

/// Outcome of re-deriving the consequences of a flat metric connection
/// with closed skew torsion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatTorsionReport {
    /// `R^D = 0`; when false the other two entries are not implied.
    pub flat: bool,
    /// `∇H = 0` for the Levi-Civitá connection.
    pub parallel: bool,
    /// `Σ_cyclic T(X, T(Y,Z)) = 0`.
    pub jacobi: bool,
    pub witness: Option<String>,
}

impl FlatTorsionReport {
    pub fn precondition_violated(&self) -> bool {
        !self.flat
    }

    pub fn holds(&self) -> bool {
        self.flat && self.parallel && self.jacobi
    }
}

fn jacobi_violation<C: Coeff>(t: &[Vec<Vec<C>>]) -> Option<[usize; 3]> {
    let n = t.len();
    // T(X, T(Y,Z)) = Σ_ν T(Y,Z)^ν T(X, e_ν)
    let apply = |x: usize, y: usize, z: usize, out: &mut Vec<C>| {
        for (v, coef) in t[y][z].iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            for (o, w) in out.iter_mut().zip(&t[x][v]) {
                if !w.is_zero() {
                    *o = o.plus(&coef.times(w));
                }
            }
        }
    };
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let mut sum = vec![C::zero(); n];
                apply(a, b, c, &mut sum);
                apply(b, c, a, &mut sum);
                apply(c, a, b, &mut sum);
                if sum.iter().any(|x| !x.is_zero()) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

fn report<C: Coeff>(rd: Result<BiSymTensor<C>, GeometryError>, nabla: &[KForm<C>], t: &[Vec<Vec<C>>]) -> FlatTorsionReport {
    let (flat, mut witness) = match rd {
        Ok(r) => match r.first_nonzero() {
            None => (true, None),
            Some((idx, v)) => (false, Some(format!("R^D{idx:?} = {v:?}"))),
        },
        Err(e) => (false, Some(e.to_string())),
    };
    let parallel = nabla.iter().all(KForm::is_zero);
    if !parallel && witness.is_none() {
        let a = nabla.iter().position(|f| !f.is_zero()).unwrap_or(0);
        witness = Some(format!("∇_{a} H ≠ 0"));
    }
    let violation = jacobi_violation(t);
    if let (Some(v), None) = (violation, &witness) {
        witness = Some(format!("cyclic sum of T(X,T(Y,Z)) nonzero at {v:?}"));
    }
    FlatTorsionReport { flat, parallel, jacobi: violation.is_none(), witness }
}

/// Independently checks `∇H = 0` and the Jacobi identity for `T` on a
/// Lie group with bi-invariant metric.
pub fn flat_torsion_consequences(g: &MetricLieAlgebra, h: &KForm<Scalar>) -> FlatTorsionReport {
    let rd = group_curvature_with_torsion(g, h);
    let nabla = group_nabla(g, h);
    let t = torsion_vectors(h, g.space().inverse_metric());
    report(rd, &nabla, &t)
}

/// Coordinate version of [`flat_torsion_consequences`].
pub fn flat_torsion_consequences_on_patch(p: &CoordinatePatch, h: &KForm<Polynomial>) -> FlatTorsionReport {
    let rd = curvature_with_torsion(p, h);
    let gamma = christoffel(p);
    let nabla = covariant_derivative(p, &gamma, h);
    let t = torsion_vectors(h, p.inverse());
    report(rd, &nabla, &t)
}

/// All `c` for which `c·H` has flat `R^D`. The defining equations are
/// quadratic in `c`; an empty result means no multiple works.
pub fn solve_torsion_scale(p: &CoordinatePatch, h: &KForm<Polynomial>) -> Result<Vec<Scalar>, GeometryError> {
    ensure_closed_poly(p, h)?;
    let gamma = christoffel(p);
    let r = riemann_from(p, &gamma);
    let c = patch_corrections(p, &gamma, h);
    let n = p.dim();
    // one scalar equation a + b c + q c² = 0 per monomial of each component
    let mut eqs: Vec<[Scalar; 3]> = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for cc in 0..n {
                for d in 0..n {
                    let parts = [r.get(a, b, cc, d), c.linear.get(a, b, cc, d), c.quadratic.get(a, b, cc, d)];
                    let mut monomials = std::collections::BTreeMap::<Vec<u32>, [Scalar; 3]>::new();
                    for (k, part) in parts.iter().enumerate() {
                        for (e, v) in part.coefficient_map() {
                            monomials.entry(e).or_insert_with(|| [Scalar::zero(), Scalar::zero(), Scalar::zero()])[k] = v;
                        }
                    }
                    eqs.extend(monomials.into_values());
                }
            }
        }
    }
    exactnum::common_real_roots(&eqs)?.ok_or_else(|| GeometryError::Unsupported("torsion scale is unconstrained".into()))
}
