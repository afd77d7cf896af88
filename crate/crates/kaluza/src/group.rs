use exactnum::Scalar;
use liealg::{ce_differential, MetricLieAlgebra};
use multilinear::{inertia, KForm};
use sugra::VerificationReport;

use crate::form::reduce_form;
use crate::witness::{describe, vanishes, vector};
use crate::KaluzaError;

/// A group manifold reduced along the left-invariant field of a unit
/// spacelike `X`. All forms are left-invariant and written in the dual
/// basis of the algebra; basic forms are horizontal pull-backs.
#[derive(Clone, Debug)]
pub struct GroupReduction {
    /// Unit representative of the direction.
    pub x: Vec<Scalar>,
    /// `⟨X, X⟩` of the direction as given.
    pub given_norm: Scalar,
    /// `α = ⟨X, θ⟩`.
    pub alpha: KForm<Scalar>,
    /// `h = ⟨θ, θ⟩ − ⟨X, θ⟩²`, degenerate along `X`.
    pub metric: Vec<Vec<Scalar>>,
    /// `(negative, positive, zero)` of `h`.
    pub signature: (usize, usize, usize),
    /// Zero: the fibre has unit length.
    pub dilaton: Scalar,
    /// `F(Y, Z) = −⟨X, [Y, Z]⟩`.
    pub f: KForm<Scalar>,
    /// `ι_X H`.
    pub g2: KForm<Scalar>,
    /// The horizontal part of `H`.
    pub g3: KForm<Scalar>,
    /// `⋆_h G₂`.
    pub star_g2: KForm<Scalar>,
    pub report: VerificationReport,
}

/// `⋆_h β` for horizontal `β`, with `vol_g = vol_h ∧ α`:
/// `⋆_g β = ⋆_h β ∧ α`, so `⋆_h β = (−1)^{n−1−p} ι_X ⋆_g β`.
pub fn horizontal_hodge(g: &MetricLieAlgebra, x: &[Scalar], beta: &KForm<Scalar>) -> KForm<Scalar> {
    let star = beta.hodge(g.space()).interior_scalar(x);
    if (g.dim() - 1 - beta.degree()) % 2 == 1 {
        star.neg()
    } else {
        star
    }
}

/// `X / |X|` for spacelike `X`.
pub fn normalize(g: &MetricLieAlgebra, x: &[Scalar]) -> Result<(Vec<Scalar>, Scalar), KaluzaError> {
    if x.len() != g.dim() {
        return Err(KaluzaError::DimensionMismatch { expected: g.dim(), found: x.len() });
    }
    let n = g.pair(x, x);
    if !n.is_positive() {
        return Err(KaluzaError::NotSpacelike(n.to_string()));
    }
    if n.is_one() {
        return Ok((x.to_vec(), n));
    }
    let inv = n.sqrt()?.inv()?;
    Ok((x.iter().map(|c| c * &inv).collect(), n))
}

/// Reduces `(g, H)` along `X`, asserting `F = G₂`, `H = ⋆_hG₂ + α∧G₂`,
/// `dG₂ = 0` and `d⋆_hG₂ = −F∧G₂`.
pub fn reduce_group(g: &MetricLieAlgebra, h: &KForm<Scalar>, x: &[Scalar]) -> Result<GroupReduction, KaluzaError> {
    let n = g.dim();
    if h.dim() != n || (h.degree() != 3 && !h.is_zero()) {
        return Err(KaluzaError::Unsupported(format!("H must be a 3-form on {n} dimensions")));
    }
    let h = if h.is_zero() { KForm::zero(n, 3) } else { h.clone() };
    let (x, given_norm) = normalize(g, x)?;
    let metric = g.metric();
    let alg = g.algebra();
    let alpha_comps: Vec<Scalar> = (0..n).map(|i| (0..n).map(|j| &x[j] * &metric[j][i]).sum()).collect();
    let alpha = KForm::one_form(alpha_comps.clone());

    let mut f_terms = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let v = -g.pair(&x, alg.bracket_basis(i, j));
            if !v.is_zero() {
                f_terms.push((vec![i, j], v));
            }
        }
    }
    let f = KForm::from_terms(n, 2, f_terms);

    let hmetric: Vec<Vec<Scalar>> =
        (0..n).map(|i| (0..n).map(|j| &metric[i][j] - &(&alpha_comps[i] * &alpha_comps[j])).collect()).collect();
    let signature = inertia(&hmetric);

    let split = reduce_form(&h, &alpha, &x)?;
    let g2 = split.h.neg();
    let g3 = split.g;
    let star_g2 = horizontal_hodge(g, &x, &g2);

    let mut report = VerificationReport::new(format!("{} / <{}>", g.name(), vector(&x)), "d6-(1,0) -> d5");
    report.invariant("|X|^2 as given", &given_norm);
    report.invariant("X (unit)", vector(&x));
    report.invariant("dilaton", Scalar::zero());
    report.invariant("F", describe(&f));
    report.invariant("G2", describe(&g2));
    if !given_norm.is_one() {
        report.note("X was rescaled to unit norm, which fixes the dilaton to zero");
    }
    report.check("connection curvature F = d alpha", vanishes(&ce_differential(alg, &alpha).sub(&f), "d alpha - F"));
    let (t, s) = g.signature();
    report.check(
        "reduced metric h is lorentzian on the complement of X",
        if signature == (t, s - 1, 1) {
            Ok(())
        } else {
            Err(format!("h has (negative, positive, zero) = {signature:?}, expected ({t}, {}, 1)", s - 1))
        },
    );
    let horizontal = [("F", &f), ("G2", &g2), ("G3", &g3)]
        .iter()
        .find_map(|(name, form)| vanishes(&form.interior_scalar(&x), &format!("i_X {name}")).err());
    report.check("horizontality i_X F = i_X G2 = i_X G3 = 0", horizontal.map_or(Ok(()), Err));
    report.check("F = G2", vanishes(&f.sub(&g2), "F - G2"));
    report.check("H = *_h G2 + alpha ^ G2", vanishes(&star_g2.add(&alpha.wedge(&g2)).sub(&h), "*_h G2 + alpha ^ G2 - H"));
    report.check("dG2 = 0", vanishes(&ce_differential(alg, &g2), "dG2"));
    report.check(
        "d *_h G2 = -F ^ G2",
        vanishes(&ce_differential(alg, &star_g2).add(&f.wedge(&g2)), "d *_h G2 + F ^ G2"),
    );
    Ok(GroupReduction { x, given_norm, alpha, metric: hmetric, signature, dilaton: Scalar::zero(), f, g2, g3, star_g2, report })
}

impl GroupReduction {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}
