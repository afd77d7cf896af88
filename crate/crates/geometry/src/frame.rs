use exactnum::{Coeff, Polynomial, Scalar};
use multilinear::{BiSymTensor, KForm, QuadraticSpace, SymTensor};

use crate::curvature::Christoffel;
use crate::patch::{contract, invert};
use crate::{CoordinatePatch, GeometryError};

/// A coframe `θ^a = θ^a_μ dx^μ` with polynomial coefficients, orthonormal
/// for a constant frame metric `η`: `g = η_{ab} θ^a θ^b`.
#[derive(Clone, Debug, PartialEq)]
pub struct Coframe {
    theta: Vec<Vec<Polynomial>>,
    vectors: Vec<Vec<Polynomial>>,
    space: QuadraticSpace,
}

impl Coframe {
    pub fn new(patch: &CoordinatePatch, theta: Vec<Vec<Polynomial>>, space: QuadraticSpace) -> Result<Self, GeometryError> {
        let n = patch.dim();
        if theta.len() != n || space.dim() != n {
            return Err(GeometryError::Dimension { expected: n, found: theta.len().min(space.dim()) });
        }
        let theta: Vec<Vec<Polynomial>> =
            theta.iter().map(|r| r.iter().map(|p| patch.lift(p)).collect::<Result<_, _>>()).collect::<Result<_, _>>()?;
        let eta = space.metric();
        for m in 0..n {
            for v in 0..n {
                let mut acc = Polynomial::zero();
                for a in 0..n {
                    for b in 0..n {
                        if !eta[a][b].is_zero() && !theta[a][m].is_zero() && !theta[b][v].is_zero() {
                            acc = acc.plus(&theta[a][m].times(&theta[b][v]).scale(&eta[a][b]));
                        }
                    }
                }
                let diff = acc.minus(&patch.metric()[m][v]);
                if !diff.is_zero() {
                    return Err(GeometryError::FrameNotOrthonormal(m, v));
                }
            }
        }
        // E_a^μ from the inverse of θ^a_μ, which is again polynomial
        let inverse = invert(&theta)?;
        let vectors = (0..n).map(|a| (0..n).map(|m| inverse[m][a].clone()).collect()).collect();
        Ok(Coframe { theta, vectors, space })
    }

    /// `θ⁺ = dx⁺ + ½ g₋₋ dx⁻`, `θ⁻ = dx⁻`, `θⁱ = dxⁱ` on a Cahen–Wallach
    /// chart, orthonormal for the lightcone frame metric.
    pub fn cahen_wallach(patch: &CoordinatePatch) -> Result<Self, GeometryError> {
        let n = patch.dim();
        let mut theta = vec![vec![Polynomial::zero(); n]; n];
        for (a, row) in theta.iter_mut().enumerate() {
            row[a] = Polynomial::one();
        }
        theta[0][1] = patch.metric()[1][1].scale(&Scalar::ratio(1, 2));
        Coframe::new(patch, theta, QuadraticSpace::lightcone(n - 2))
    }

    /// The coordinate coframe of a chart with constant metric.
    pub fn coordinate(patch: &CoordinatePatch) -> Result<Self, GeometryError> {
        let n = patch.dim();
        let metric: Vec<Vec<Scalar>> = patch
            .metric()
            .iter()
            .map(|r| r.iter().map(|p| p.as_scalar().ok_or_else(|| GeometryError::Unsupported("non-constant metric".into()))).collect())
            .collect::<Result<_, _>>()?;
        let theta = exactnum::linalg::identity(n);
        Coframe::new(patch, theta, QuadraticSpace::new(metric, 1)?)
    }

    pub fn with_orientation(mut self, orientation: i32) -> Result<Self, GeometryError> {
        self.space = self.space.with_orientation(orientation)?;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.theta.len()
    }

    pub fn space(&self) -> &QuadraticSpace {
        &self.space
    }

    /// `θ^a_μ`.
    pub fn theta(&self) -> &[Vec<Polynomial>] {
        &self.theta
    }

    /// `E_a^μ`, the dual frame.
    pub fn vectors(&self) -> &[Vec<Polynomial>] {
        &self.vectors
    }

    /// Frame components `θ^a(v)` of a coordinate vector.
    pub fn vector_to_frame(&self, v: &[Polynomial]) -> Vec<Polynomial> {
        contract(&self.theta, v)
    }

    /// Coordinate components of the frame vector `Σ c^a E_a`.
    pub fn vector_to_coords(&self, c: &[Polynomial]) -> Vec<Polynomial> {
        let n = self.dim();
        (0..n)
            .map(|m| {
                (0..n).filter(|&a| !c[a].is_zero() && !self.vectors[a][m].is_zero()).fold(Polynomial::zero(), |acc, a| {
                    acc.plus(&c[a].times(&self.vectors[a][m]))
                })
            })
            .collect()
    }

    /// Rewrites a coordinate-basis form in the coframe.
    pub fn form_to_frame(&self, form: &KForm<Polynomial>) -> KForm<Polynomial> {
        // dx^μ = E_a^μ θ^a
        let n = self.dim();
        let images: Vec<Vec<Polynomial>> = (0..n).map(|m| (0..n).map(|a| self.vectors[a][m].clone()).collect()).collect();
        change_basis(form, &images)
    }

    /// Rewrites a coframe form in coordinates.
    pub fn form_to_coords(&self, form: &KForm<Polynomial>) -> KForm<Polynomial> {
        change_basis(form, &self.theta)
    }

    /// Frame components `T(E_a, E_b)` of a coordinate 2-tensor.
    pub fn sym_to_frame(&self, t: &SymTensor<Polynomial>) -> SymTensor<Polynomial> {
        let n = self.dim();
        let left: Vec<Vec<Polynomial>> = (0..n).map(|a| contract(t, &self.vectors[a])).collect();
        (0..n).map(|a| (0..n).map(|b| dot(&left[b], &self.vectors[a])).collect()).collect()
    }

    /// Frame components of a coordinate 4-tensor.
    pub fn tensor4_to_frame(&self, r: &BiSymTensor<Polynomial>) -> BiSymTensor<Polynomial> {
        let n = self.dim();
        let e = &self.vectors;
        // contract one slot at a time
        let mut cur: Vec<Polynomial> = (0..n.pow(4)).map(|o| {
            let (a, b, c, d) = (o / (n * n * n), (o / (n * n)) % n, (o / n) % n, o % n);
            r.get(a, b, c, d).clone()
        }).collect();
        for slot in 0..4 {
            let stride = n.pow(3 - slot as u32);
            let mut next = vec![Polynomial::zero(); n.pow(4)];
            for (o, out) in next.iter_mut().enumerate() {
                let idx = (o / stride) % n;
                let base = o - idx * stride;
                let mut acc = Polynomial::zero();
                for m in 0..n {
                    let src = &cur[base + m * stride];
                    if !src.is_zero() && !e[idx][m].is_zero() {
                        acc = acc.plus(&e[idx][m].times(src));
                    }
                }
                *out = acc;
            }
            cur = next;
        }
        BiSymTensor::from_fn(n, |a, b, c, d| cur[((a * n + b) * n + c) * n + d].clone())
    }

    /// `ω[μ][a][b] = ω_{μ ab} = η_{ac} θ^c(∇_μ E_b)`, skew in `a, b`.
    pub fn spin_connection(&self, patch: &CoordinatePatch, gamma: &Christoffel) -> Vec<Vec<Vec<Polynomial>>> {
        let n = self.dim();
        let eta = self.space.metric();
        (0..n)
            .map(|m| {
                // ∇_μ E_b in coordinates
                let nabla: Vec<Vec<Polynomial>> = (0..n)
                    .map(|b| {
                        (0..n)
                            .map(|v| {
                                let mut x = patch.partial(&self.vectors[b][v], m);
                                for l in 0..n {
                                    if !gamma[v][m][l].is_zero() && !self.vectors[b][l].is_zero() {
                                        x = x.plus(&gamma[v][m][l].times(&self.vectors[b][l]));
                                    }
                                }
                                x
                            })
                            .collect()
                    })
                    .collect();
                let upper: Vec<Vec<Polynomial>> =
                    (0..n).map(|c| (0..n).map(|b| dot(&self.theta[c], &nabla[b])).collect()).collect();
                (0..n)
                    .map(|a| {
                        (0..n)
                            .map(|b| {
                                (0..n)
                                    .filter(|&c| !eta[a][c].is_zero())
                                    .fold(Polynomial::zero(), |acc, c| acc.plus(&upper[c][b].scale(&eta[a][c])))
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }
}

fn dot(u: &[Polynomial], v: &[Polynomial]) -> Polynomial {
    u.iter().zip(v).filter(|(a, b)| !a.is_zero() && !b.is_zero()).fold(Polynomial::zero(), |acc, (a, b)| acc.plus(&a.times(b)))
}

/// Substitutes each basis 1-form `e^i ↦ Σ_j m[i][j] f^j`.
pub fn change_basis<C: Coeff>(form: &KForm<C>, m: &[Vec<C>]) -> KForm<C> {
    let n = form.dim();
    let images: Vec<KForm<C>> = m.iter().map(|row| KForm::one_form(row.clone())).collect();
    let mut out = KForm::zero(n, form.degree());
    for (idx, c) in form.indexed_terms() {
        let mut acc: KForm<C> = KForm::constant(n, c.clone());
        for i in idx {
            acc = acc.wedge(&images[i]);
        }
        out = out.add(&acc);
    }
    out
}
