use exactnum::{linalg, Scalar};

use crate::spectrum::{symmetric_eigenvalues, Spectrum};
use crate::{LieAlgebra, LieError};

/// Data of a Cahen–Wallach space: total dimension `n ≥ 3` and a symmetric
/// `(n−2)×(n−2)` matrix `A`.
#[derive(Clone, Debug, PartialEq)]
pub struct CwData {
    n: usize,
    a: Vec<Vec<Scalar>>,
}

impl CwData {
    pub fn new(a: Vec<Vec<Scalar>>) -> Result<Self, LieError> {
        let m = a.len();
        if let Some(r) = a.iter().find(|r| r.len() != m) {
            return Err(LieError::Dimension { expected: m, found: r.len() });
        }
        for i in 0..m {
            for j in 0..i {
                if a[i][j] != a[j][i] {
                    return Err(LieError::NotSymmetric(i, j));
                }
            }
        }
        Ok(CwData { n: m + 2, a })
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let m = entries.len();
        let a = (0..m)
            .map(|i| (0..m).map(|j| if i == j { entries[i].clone() } else { Scalar::zero() }).collect())
            .collect();
        CwData { n: m + 2, a }
    }

    /// Total dimension of the space.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &[Vec<Scalar>] {
        &self.a
    }

    pub fn trace(&self) -> Scalar {
        (0..self.a.len()).map(|i| self.a[i][i].clone()).sum()
    }

    /// Indecomposable iff `A` is nondegenerate.
    pub fn is_indecomposable(&self) -> Result<bool, LieError> {
        Ok(!linalg::determinant(&self.a)?.is_zero())
    }
}

/// The algebra `𝔤_A` with its symmetric split `𝔨 = V*`, `𝔭 = Z ⊕ Z* ⊕ V`.
///
/// Basis order: `e₊, e₋, v₁, …, v_m, α₁, …, α_m`.
#[derive(Clone, Debug, PartialEq)]
pub struct CwAlgebra {
    pub algebra: LieAlgebra,
    pub data: CwData,
    /// Indices spanning `𝔨`.
    pub k: Vec<usize>,
    /// Indices spanning `𝔭`.
    pub p: Vec<usize>,
    /// `B` on `𝔭`: `⟨e₊, e₋⟩ = 1`, euclidean on `V`.
    pub p_metric: Vec<Vec<Scalar>>,
}

/// Brackets of `𝔤_A` without checking that `A` is symmetric:
/// `[e₋, v] = v♭`, `[e₋, α] = A(α♯)`, `[α, v] = A(v, α♯) e₊`.
pub fn cw_brackets(a: &[Vec<Scalar>]) -> Result<LieAlgebra, LieError> {
    let m = a.len();
    let dim = 2 * m + 2;
    let v = |i: usize| 2 + i;
    let alpha = |i: usize| 2 + m + i;
    let mut g = LieAlgebra::abelian(dim);
    for i in 0..m {
        let mut flat = vec![Scalar::zero(); dim];
        flat[alpha(i)] = Scalar::one();
        g.set_bracket(1, v(i), flat)?;
        let mut image = vec![Scalar::zero(); dim];
        for k in 0..m {
            image[v(k)] = a[i][k].clone();
        }
        g.set_bracket(1, alpha(i), image)?;
        for j in 0..m {
            let mut central = vec![Scalar::zero(); dim];
            central[0] = a[j][i].clone();
            g.set_bracket(alpha(i), v(j), central)?;
        }
    }
    Ok(g)
}

pub fn cw_algebra(data: &CwData) -> Result<CwAlgebra, LieError> {
    let data = CwData::new(data.a.clone())?;
    let m = data.a.len();
    let algebra = cw_brackets(&data.a)?;
    let k: Vec<usize> = (2 + m..2 + 2 * m).collect();
    let p: Vec<usize> = (0..2 + m).collect();
    let mut p_metric = vec![vec![Scalar::zero(); m + 2]; m + 2];
    p_metric[0][1] = Scalar::one();
    p_metric[1][0] = Scalar::one();
    for i in 0..m {
        p_metric[i + 2][i + 2] = Scalar::one();
    }
    Ok(CwAlgebra { algebra, data, k, p, p_metric })
}

impl CwAlgebra {
    fn in_span(v: &[Scalar], idx: &[usize]) -> bool {
        v.iter().enumerate().all(|(i, x)| x.is_zero() || idx.contains(&i))
    }

    /// `[𝔨, 𝔭] ⊂ 𝔭` and `[𝔭, 𝔭] ⊂ 𝔨`.
    pub fn is_symmetric_split(&self) -> bool {
        let kp = self.k.iter().all(|&a| self.p.iter().all(|&b| Self::in_span(self.algebra.bracket_basis(a, b), &self.p)));
        let pp = self.p.iter().all(|&a| self.p.iter().all(|&b| Self::in_span(self.algebra.bracket_basis(a, b), &self.k)));
        let kk = self.k.iter().all(|&a| self.k.iter().all(|&b| Self::in_span(self.algebra.bracket_basis(a, b), &self.k)));
        kp && pp && kk
    }

    /// `𝔨`-invariance of `B`: `B([X, u], w) + B(u, [X, w]) = 0` for
    /// `X ∈ 𝔨`, `u, w ∈ 𝔭`.
    pub fn is_k_invariant(&self) -> bool {
        let project = |v: &[Scalar]| -> Vec<Scalar> { self.p.iter().map(|&i| v[i].clone()).collect() };
        let pair = |u: &[Scalar], w: &[Scalar]| -> Scalar {
            let mut acc = Scalar::zero();
            for (i, ui) in u.iter().enumerate() {
                for (j, wj) in w.iter().enumerate() {
                    if !self.p_metric[i][j].is_zero() {
                        acc += &(&(ui * wj) * &self.p_metric[i][j]);
                    }
                }
            }
            acc
        };
        let unit = |i: usize| -> Vec<Scalar> {
            (0..self.p.len()).map(|j| if j == i { Scalar::one() } else { Scalar::zero() }).collect()
        };
        self.k.iter().all(|&x| {
            (0..self.p.len()).all(|u| {
                (0..self.p.len()).all(|w| {
                    let xu = project(self.algebra.bracket_basis(x, self.p[u]));
                    let xw = project(self.algebra.bracket_basis(x, self.p[w]));
                    (&pair(&xu, &unit(w)) + &pair(&unit(u), &xw)).is_zero()
                })
            })
        })
    }

    /// The second derived ideal is central, so the algebra is solvable.
    pub fn second_derived_is_central(&self) -> Result<bool, LieError> {
        let series = self.algebra.derived_series()?;
        let Some(second) = series.get(2) else {
            return Ok(true);
        };
        let n = self.algebra.dim();
        Ok(second.iter().all(|z| {
            (0..n).all(|i| {
                let mut e = vec![Scalar::zero(); n];
                e[i] = Scalar::one();
                self.algebra.bracket(z, &e).iter().all(|x| x.is_zero())
            })
        }))
    }
}

/// Canonical representative of a Cahen–Wallach isometry class.
#[derive(Clone, Debug, PartialEq)]
pub struct CwCanonical {
    /// Eigenvalues of `A`, ascending, scaled to unit euclidean norm.
    pub eigenvalues: Spectrum,
    /// Some eigenvalue vanishes: the space is decomposable.
    pub degenerate: bool,
}

/// Canonical form of `A` up to orthogonal conjugation and positive scale.
pub fn cw_canonicalize(data: &CwData) -> Result<CwCanonical, LieError> {
    let data = CwData::new(data.a.clone())?;
    let degenerate = !data.is_indecomposable()?;
    let eigenvalues = match symmetric_eigenvalues(&data.a) {
        Spectrum::Exact(v) => {
            let norm_sq: Scalar = v.iter().map(|x| x * x).sum();
            if norm_sq.is_zero() {
                Spectrum::Exact(v)
            } else {
                let norm = norm_sq.sqrt()?;
                Spectrum::Exact(v.iter().map(|x| x / &norm).collect())
            }
        }
        Spectrum::Approximate(v) => {
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            Spectrum::Approximate(if norm == 0.0 { v } else { v.iter().map(|x| x / norm).collect() })
        }
    };
    Ok(CwCanonical { eigenvalues, degenerate })
}
