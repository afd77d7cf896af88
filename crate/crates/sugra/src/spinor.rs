use std::fmt::Display;

use clifford::{kernel, Expandable, FrameClifford, SpinMatrix};
use exactnum::{Coeff, Complex, Polynomial, Scalar};
use geometry::{christoffel, Coframe, CoordinatePatch};
use multilinear::KForm;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::background::{BackgroundSpec, Geometry, Theory};
use crate::SugraError;

/// Matrix entries that can be differentiated along chart coordinates.
pub trait Differentiable: Expandable + Display {
    fn derivative(&self, patch: &CoordinatePatch, i: usize) -> Self;
}

impl Differentiable for Polynomial {
    fn derivative(&self, patch: &CoordinatePatch, i: usize) -> Self {
        patch.partial(self, i)
    }
}

impl Differentiable for Complex<Polynomial> {
    fn derivative(&self, patch: &CoordinatePatch, i: usize) -> Self {
        Complex::new(patch.partial(&self.re, i), patch.partial(&self.im, i))
    }
}

fn clifford_for(frame: &Coframe) -> Result<FrameClifford, SugraError> {
    let space = frame.space();
    Ok(FrameClifford::with_orientation(space.metric().to_vec(), space.orientation())?)
}

/// `¼ ω_{μab} γ^a γ^b` for every coordinate direction `μ`.
fn spin_part(patch: &CoordinatePatch, frame: &Coframe, cl: &FrameClifford) -> Vec<SpinMatrix<Polynomial>> {
    let n = patch.dim();
    let w = frame.spin_connection(patch, &christoffel(patch));
    let quarter = Scalar::ratio(1, 4);
    let products: Vec<Vec<SpinMatrix<Polynomial>>> = (0..n)
        .map(|a| (0..n).map(|b| cl.gamma_upper(a).mul(cl.gamma_upper(b)).lift()).collect())
        .collect();
    (0..n)
        .into_par_iter()
        .map(|m| {
            let mut acc = SpinMatrix::zero(cl.spinor_dim());
            for a in 0..n {
                for b in 0..n {
                    if a != b && !w[m][a][b].is_zero() {
                        acc = acc.add(&products[a][b].scale_by(&w[m][a][b]));
                    }
                }
            }
            acc.scale(&quarter)
        })
        .collect()
}

/// `θ^a(∂_μ)` as a frame vector.
fn coordinate_direction(frame: &Coframe, m: usize) -> Vec<Polynomial> {
    frame.theta().iter().map(|row| row[m].clone()).collect()
}

/// `Θ_μ = ¼ω_μ + Ω_{∂_μ}(F)`, with `F` in frame components.
pub fn d11_connection(patch: &CoordinatePatch, frame: &Coframe, f: &KForm<Polynomial>) -> Result<Vec<SpinMatrix<Polynomial>>, SugraError> {
    let cl = clifford_for(frame)?;
    Ok(d11_connection_with(patch, frame, &cl, f))
}

fn d11_connection_with(patch: &CoordinatePatch, frame: &Coframe, cl: &FrameClifford, f: &KForm<Polynomial>) -> Vec<SpinMatrix<Polynomial>> {
    let spin = spin_part(patch, frame, cl);
    spin.into_par_iter()
        .enumerate()
        .map(|(m, s)| if f.is_zero() { s } else { s.add(&cl.omega_xf(&coordinate_direction(frame, m), f)) })
        .collect()
}

fn complexify(m: &SpinMatrix<Polynomial>) -> SpinMatrix<Complex<Polynomial>> {
    m.map(|x| Complex::real(x.clone()))
}

/// `Θ_μ = ¼ω_μ + (i/4) c(F) c(∂_μ♭)`, with `F` in frame components.
pub fn iib_connection(patch: &CoordinatePatch, frame: &Coframe, f: &KForm<Polynomial>) -> Result<Vec<SpinMatrix<Complex<Polynomial>>>, SugraError> {
    let cl = clifford_for(frame)?;
    Ok(iib_connection_with(patch, frame, &cl, f))
}

fn iib_connection_with(
    patch: &CoordinatePatch,
    frame: &Coframe,
    cl: &FrameClifford,
    f: &KForm<Polynomial>,
) -> Vec<SpinMatrix<Complex<Polynomial>>> {
    let spin = spin_part(patch, frame, cl);
    let cf = cl.clifford_action(f);
    let i_quarter = Complex::new(Polynomial::zero(), Polynomial::constant(Scalar::ratio(1, 4)));
    spin.into_par_iter()
        .enumerate()
        .map(|(m, s)| {
            let s = complexify(&s);
            if f.is_zero() {
                return s;
            }
            let cx = cl.clifford_vector(&coordinate_direction(frame, m));
            s.add(&complexify(&cf.mul(&cx)).scale_by(&i_quarter))
        })
        .collect()
}

/// `R_{μν} = ∂_μΘ_ν − ∂_νΘ_μ + [Θ_μ, Θ_ν]` for `μ < ν`.
pub fn connection_curvature<C: Differentiable>(patch: &CoordinatePatch, theta: &[SpinMatrix<C>]) -> Vec<((usize, usize), SpinMatrix<C>)> {
    let n = theta.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|m| (m + 1..n).map(move |v| (m, v))).collect();
    pairs
        .into_par_iter()
        .map(|(m, v)| {
            let dv = theta[v].map(|x| x.derivative(patch, m));
            let dm = theta[m].map(|x| x.derivative(patch, v));
            ((m, v), dv.sub(&dm).add(&theta[m].commutator(&theta[v])))
        })
        .collect()
}

/// Outcome of the supercovariant curvature computation on a chart.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlatnessReport {
    /// Dimension of the space of spinors annihilated by every `R_{μν}`.
    pub kernel_dim: usize,
    /// Rank of the spinor bundle the kernel lives in.
    pub rank: usize,
    /// `kernel_dim / rank`.
    pub nu: String,
    pub flat: bool,
    /// First nonzero curvature entry, when not flat.
    pub curvature_witness: Option<String>,
    /// First curvature value with nonzero trace.
    pub trace_witness: Option<String>,
    /// First failure of `Σ_b γ^b R(E_a, E_b) = 0`.
    pub clifford_trace_witness: Option<String>,
    /// First failure of the skew-symmetry of `∇V` for bilinears of parallel
    /// spinors, when checked.
    pub killing_witness: Option<String>,
    pub killing_checked: bool,
    /// Frame components of a sample Killing vector built from two kernel
    /// spinors.
    pub sample_killing_vector: Option<Vec<String>>,
    /// Chirality of the spinors, when restricted.
    pub chirality: Option<i32>,
}

impl FlatnessReport {
    pub fn nu_value(&self) -> Scalar {
        Scalar::ratio(self.kernel_dim as i64, self.rank as i64)
    }
}

fn curvature_witness<C: Coeff + Display>(curv: &[((usize, usize), SpinMatrix<C>)], labels: &[String]) -> Option<String> {
    curv.iter().find_map(|((m, v), r)| {
        r.first_nonzero().map(|(i, j, x)| format!("R({}, {}) entry ({i}, {j}) = {x}", labels[*m], labels[*v]))
    })
}

fn trace_witness<C: Coeff + Display>(curv: &[((usize, usize), SpinMatrix<C>)], labels: &[String]) -> Option<String> {
    curv.iter().find_map(|((m, v), r)| {
        let t = r.trace();
        (!t.is_zero()).then(|| format!("tr R({}, {}) = {t}", labels[*m], labels[*v]))
    })
}

/// `Σ_b γ^b R(E_a, E_b)` for every frame index `a`, first nonzero entry.
fn clifford_trace_witness(
    frame: &Coframe,
    cl: &FrameClifford,
    curv: &[((usize, usize), SpinMatrix<Polynomial>)],
) -> Option<String> {
    let n = frame.dim();
    let e = frame.vectors();
    let spin = cl.spinor_dim();
    // R(E_a, E_b) = Σ_{μ<ν} (E_a^μ E_b^ν − E_a^ν E_b^μ) R_{μν}
    let frame_curv = |a: usize, b: usize| -> SpinMatrix<Polynomial> {
        let mut acc = SpinMatrix::zero(spin);
        for ((m, v), r) in curv {
            if r.is_zero() {
                continue;
            }
            let c = e[a][*m].times(&e[b][*v]).minus(&e[a][*v].times(&e[b][*m]));
            if !c.is_zero() {
                acc = acc.add(&r.scale_by(&c));
            }
        }
        acc
    };
    (0..n).into_par_iter().find_map_first(|a| {
        let mut total = SpinMatrix::zero(spin);
        for b in (0..n).filter(|&b| b != a) {
            total = total.add(&cl.gamma_upper(b).lift().mul(&frame_curv(a, b)));
        }
        total.first_nonzero().map(|(i, j, x)| format!("frame index {a}: entry ({i}, {j}) = {x}"))
    })
}

/// With `ε` parallel, `∇_a V_b = −[(Ω_a ε₁, γ_b ε₂) + (ε₁, γ_b Ω_a ε₂)]`, so
/// `V` is Killing iff `M_ab = Ω_aᵀ C γ_b + C γ_b Ω_a` is skew in `a, b`.
fn killing_matrices(cl: &FrameClifford, f: &KForm<Polynomial>) -> Result<Vec<Vec<SpinMatrix<Polynomial>>>, SugraError> {
    let n = cl.dim();
    let c = cl.rep().pairing().ok_or(clifford::CliffordError::NoPairing)?.lift::<Polynomial>();
    let omegas: Vec<SpinMatrix<Polynomial>> = (0..n)
        .map(|a| {
            let mut x = vec![Polynomial::zero(); n];
            x[a] = Polynomial::one();
            cl.omega_xf(&x, f)
        })
        .collect();
    Ok((0..n)
        .into_par_iter()
        .map(|a| {
            (0..n)
                .map(|b| {
                    let cg = c.mul(&cl.gamma_lower(b).lift());
                    omegas[a].transpose().mul(&cg).add(&cg.mul(&omegas[a]))
                })
                .collect()
        })
        .collect())
}

fn killing_witness(m: &[Vec<SpinMatrix<Polynomial>>]) -> Option<String> {
    let n = m.len();
    for a in 0..n {
        for b in a..n {
            if let Some((i, j, x)) = m[a][b].add(&m[b][a]).first_nonzero() {
                return Some(format!("symmetric part of ∇V at frame ({a}, {b}), entry ({i}, {j}) = {x}"));
            }
        }
    }
    None
}

/// `V` from the first two kernel spinors at the origin, checked against
/// `∇_a V_b + ∇_b V_a = 0` there.
fn sample_vector(cl: &FrameClifford, m: &[Vec<SpinMatrix<Polynomial>>], basis: &[Vec<Scalar>]) -> Result<Option<Vec<String>>, SugraError> {
    if basis.len() < 2 {
        return Ok(None);
    }
    let (e1, e2) = (&basis[0], &basis[1]);
    let v = cl.spinor_to_vector(e1, e2)?;
    let n = cl.dim();
    let at_origin = |p: &Polynomial| p.constant_term();
    let grad = |a: usize, b: usize| -> Scalar {
        let mm = m[a][b].map(at_origin);
        let w = mm.apply(e2);
        -e1.iter().zip(&w).map(|(x, y)| x * y).sum::<Scalar>()
    };
    for a in 0..n {
        for b in a..n {
            let s = &grad(a, b) + &grad(b, a);
            if !s.is_zero() {
                return Err(SugraError::Unsupported(format!("sample Killing vector fails at ({a}, {b}): {s}")));
            }
        }
    }
    Ok(Some(v.iter().map(Scalar::to_string).collect()))
}

/// Supercovariant curvature of a polynomial chart background and the
/// dimension of its parallel spinors.
pub fn supercovariant_flatness(b: &BackgroundSpec) -> Result<FlatnessReport, SugraError> {
    b.expect_theory(&[Theory::D11, Theory::Iib])?;
    let Geometry::Patch { patch, frame } = &b.geometry else {
        return Err(SugraError::Unsupported(format!(
            "supercovariant curvature needs a polynomial chart, `{}` is a {} geometry",
            b.id,
            b.geometry.kind()
        )));
    };
    let labels = b.geometry.labels();
    let cl = clifford_for(frame)?;
    match b.theory {
        Theory::D11 => {
            let f = frame.form_to_frame(&b.flux_or_zero("F4", 4)?);
            let theta = d11_connection_with(patch, frame, &cl, &f);
            let curv = connection_curvature(patch, &theta);
            let ops: Vec<SpinMatrix<Polynomial>> = curv.iter().map(|(_, r)| r.clone()).collect();
            let k = kernel(&ops)?;
            let rank = cl.spinor_dim();
            let m = killing_matrices(&cl, &f)?;
            let killing = killing_witness(&m);
            let sample = if killing.is_none() { sample_vector(&cl, &m, &k.basis)? } else { None };
            Ok(FlatnessReport {
                kernel_dim: k.dim,
                rank,
                nu: Scalar::ratio(k.dim as i64, rank as i64).to_string(),
                flat: k.dim == rank,
                curvature_witness: curvature_witness(&curv, &labels),
                trace_witness: trace_witness(&curv, &labels),
                clifford_trace_witness: clifford_trace_witness(frame, &cl, &curv),
                killing_witness: killing,
                killing_checked: true,
                sample_killing_vector: sample,
                chirality: None,
            })
        }
        _ => {
            let f = frame.form_to_frame(&b.flux_or_zero("F5", 5)?);
            ensure_self_dual(&f, frame.space(), &labels)?;
            let gamma = cl.chirality().ok_or_else(|| SugraError::Unsupported("no chirality operator".into()))?;
            let s = active_chirality(&cl, &f, gamma);
            let theta = iib_connection_with(patch, frame, &cl, &f);
            let curv = connection_curvature(patch, &theta);
            let restrict = complexify(&gamma.lift::<Polynomial>().sub(&SpinMatrix::identity(cl.spinor_dim()).scale(&Scalar::from(s))));
            let mut ops: Vec<SpinMatrix<Complex<Polynomial>>> = vec![restrict];
            ops.extend(curv.iter().map(|(_, r)| r.clone()));
            let k = kernel(&ops)?;
            let rank = cl.spinor_dim() / 2;
            Ok(FlatnessReport {
                kernel_dim: k.dim,
                rank,
                nu: Scalar::ratio(k.dim as i64, rank as i64).to_string(),
                flat: k.dim == rank,
                curvature_witness: restricted_witness(&curv, gamma, s, &labels),
                trace_witness: trace_witness(&curv, &labels),
                clifford_trace_witness: None,
                killing_witness: None,
                killing_checked: false,
                sample_killing_vector: None,
                chirality: Some(s),
            })
        }
    }
}

/// First nonzero entry of `R_{μν} P_s` with `P_s = ½(1 + sΓ)`.
fn restricted_witness(
    curv: &[((usize, usize), SpinMatrix<Complex<Polynomial>>)],
    gamma: &SpinMatrix<Scalar>,
    s: i32,
    labels: &[String],
) -> Option<String> {
    let n = gamma.size();
    let proj = complexify(&SpinMatrix::<Polynomial>::identity(n).add(&gamma.lift().scale(&Scalar::from(s))));
    let restricted: Vec<_> = curv.iter().map(|(k, r)| (*k, r.mul(&proj))).collect();
    curvature_witness(&restricted, labels)
}

/// The chirality `s` on which `c(F) c(X)` acts: `c(F)` must not vanish on
/// the opposite half. Defaults to `+1` when `F = 0`.
fn active_chirality(cl: &FrameClifford, f: &KForm<Polynomial>, gamma: &SpinMatrix<Scalar>) -> i32 {
    if f.is_zero() {
        return 1;
    }
    let cf = cl.clifford_action(f);
    let id = SpinMatrix::<Polynomial>::identity(cl.spinor_dim());
    let minus_half = id.sub(&gamma.lift());
    if cf.mul(&minus_half).is_zero() {
        -1
    } else {
        1
    }
}

/// `⋆F = F`, else an error naming the first offending component.
pub(crate) fn ensure_self_dual<C: Coeff + Display>(
    f: &KForm<C>,
    space: &multilinear::QuadraticSpace,
    labels: &[String],
) -> Result<(), SugraError> {
    let diff = f.hodge(space).sub(f);
    let first = diff.indexed_terms().next().map(|(idx, c)| (idx, c.to_string()));
    match first {
        None => Ok(()),
        Some((idx, c)) => {
            let names: Vec<&str> = idx.iter().map(|&i| labels.get(i).map_or("?", String::as_str)).collect();
            Err(SugraError::NotSelfDual(format!("⋆F − F has component {c} on ({})", names.join(", "))))
        }
    }
}
