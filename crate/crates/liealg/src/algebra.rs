use exactnum::{linalg, Scalar};
use multilinear::QuadraticSpace;

use crate::LieError;

/// A Lie algebra given by structure constants `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra {
    dim: usize,
    consts: Vec<Vec<Vec<Scalar>>>,
}

fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(|x| x.is_zero())
}

impl LieAlgebra {
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra { dim, consts: vec![vec![vec![Scalar::zero(); dim]; dim]; dim] }
    }

    /// Builds from brackets `[e_i, e_j] = Σ (k, c) c e_k` listed for `i < j`
    /// or `i > j`; the opposite ordering is filled in by antisymmetry.
    pub fn from_brackets(dim: usize, brackets: &[(usize, usize, Vec<(usize, Scalar)>)]) -> Result<Self, LieError> {
        let mut out = LieAlgebra::abelian(dim);
        for (i, j, terms) in brackets {
            let mut v = vec![Scalar::zero(); dim];
            for (k, c) in terms {
                v[*k] += c;
            }
            out.set_bracket(*i, *j, v)?;
        }
        Ok(out)
    }

    /// Sets `[e_i, e_j]` and `[e_j, e_i]`. Rejects a nonzero `[e_i, e_i]`
    /// and a previously set value that would be contradicted.
    pub fn set_bracket(&mut self, i: usize, j: usize, value: Vec<Scalar>) -> Result<(), LieError> {
        if value.len() != self.dim {
            return Err(LieError::Dimension { expected: self.dim, found: value.len() });
        }
        if i == j {
            return if is_zero_vec(&value) { Ok(()) } else { Err(LieError::NotAntisymmetric(i, j)) };
        }
        let existing = &self.consts[i][j];
        if !is_zero_vec(existing) && *existing != value {
            return Err(LieError::NotAntisymmetric(i, j));
        }
        self.consts[j][i] = value.iter().map(|x| -x).collect();
        self.consts[i][j] = value;
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `[e_i, e_j]` as a coefficient vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.consts[i][j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.consts[i][j][k]
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let c = &self.consts[i][j];
                if is_zero_vec(c) {
                    continue;
                }
                let f = xi * yj;
                for (o, ck) in out.iter_mut().zip(c) {
                    if !ck.is_zero() {
                        *o += &(&f * ck);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad_x`, acting on column vectors.
    pub fn ad(&self, x: &[Scalar]) -> Vec<Vec<Scalar>> {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.bracket(x, &basis_vector(self.dim, j))).collect();
        (0..self.dim).map(|k| (0..self.dim).map(|j| cols[j][k].clone()).collect()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.consts.iter().all(|r| r.iter().all(|c| is_zero_vec(c)))
    }

    /// First basis triple with `[e_i,[e_j,e_k]] + cyclic ≠ 0`.
    pub fn jacobi_check(&self) -> Result<(), LieError> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let ei = basis_vector(n, i);
                    let ej = basis_vector(n, j);
                    let ek = basis_vector(n, k);
                    let a = self.bracket(&ei, &self.bracket(&ej, &ek));
                    let b = self.bracket(&ej, &self.bracket(&ek, &ei));
                    let c = self.bracket(&ek, &self.bracket(&ei, &ej));
                    let sum: Vec<Scalar> = (0..n).map(|m| &(&a[m] + &b[m]) + &c[m]).collect();
                    if !is_zero_vec(&sum) {
                        return Err(LieError::Jacobi([i, j, k]));
                    }
                }
            }
        }
        Ok(())
    }

    /// Basis of the center.
    pub fn center(&self) -> Result<Vec<Vec<Scalar>>, LieError> {
        let n = self.dim;
        let mut rows = Vec::new();
        for j in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|i| self.consts[i][j][k].clone()).collect::<Vec<_>>());
            }
        }
        Ok(linalg::nullspace(&rows, n)?)
    }

    /// Basis of `[a, b]` for subspaces spanned by the given vectors.
    pub fn bracket_span(&self, a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>, LieError> {
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for x in a {
            for y in b {
                let v = self.bracket(x, y);
                if !is_zero_vec(&v) {
                    rows.push(v);
                }
            }
        }
        if rows.is_empty() {
            return Ok(rows);
        }
        linalg::rref(&mut rows)?;
        Ok(rows)
    }

    /// Derived series `g ⊃ [g,g] ⊃ …` until it stabilizes.
    pub fn derived_series(&self) -> Result<Vec<Vec<Vec<Scalar>>>, LieError> {
        let mut series = vec![(0..self.dim).map(|i| basis_vector(self.dim, i)).collect::<Vec<_>>()];
        loop {
            let last = series.last().expect("series is nonempty");
            let next = self.bracket_span(last, last)?;
            let done = next.len() == last.len() || next.is_empty();
            series.push(next);
            if done {
                return Ok(series);
            }
        }
    }

    pub fn is_solvable(&self) -> Result<bool, LieError> {
        Ok(self.derived_series()?.last().is_some_and(|s| s.is_empty()))
    }

    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let n = self.dim + other.dim;
        let mut out = LieAlgebra::abelian(n);
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    out.consts[i][j][k] = self.consts[i][j][k].clone();
                }
            }
        }
        let o = self.dim;
        for i in 0..other.dim {
            for j in 0..other.dim {
                for k in 0..other.dim {
                    out.consts[o + i][o + j][o + k] = other.consts[i][j][k].clone();
                }
            }
        }
        out
    }

    /// `true` if `map` (columns are images of basis vectors) intertwines
    /// the brackets of `self` and `target`.
    pub fn is_homomorphism(&self, target: &LieAlgebra, map: &[Vec<Scalar>]) -> bool {
        let n = self.dim;
        let image = |v: &[Scalar]| -> Vec<Scalar> {
            (0..target.dim).map(|r| (0..n).map(|c| &map[r][c] * &v[c]).sum()).collect()
        };
        let columns: Vec<Vec<Scalar>> = (0..n).map(|j| image(&basis_vector(n, j))).collect();
        (0..n).all(|i| (0..n).all(|j| image(&self.consts[i][j]) == target.bracket(&columns[i], &columns[j])))
    }
}

pub(crate) fn basis_vector(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// A Lie algebra with a nondegenerate symmetric bilinear form `B`.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricLieAlgebra {
    name: String,
    algebra: LieAlgebra,
    space: QuadraticSpace,
}

impl MetricLieAlgebra {
    /// Pairs an algebra with a metric. Antisymmetry is structural; Jacobi
    /// and invariance are checked separately by the caller's choice.
    pub fn new(name: impl Into<String>, algebra: LieAlgebra, metric: Vec<Vec<Scalar>>) -> Result<Self, LieError> {
        if metric.len() != algebra.dim() {
            return Err(LieError::Dimension { expected: algebra.dim(), found: metric.len() });
        }
        for i in 0..metric.len() {
            for j in 0..i {
                if metric[i][j] != metric[j][i] {
                    return Err(LieError::NotSymmetric(i, j));
                }
            }
        }
        let space = QuadraticSpace::new(metric, 1)?;
        Ok(MetricLieAlgebra { name: name.into(), algebra, space })
    }

    pub fn with_orientation(mut self, orientation: i32) -> Result<Self, LieError> {
        self.space = self.space.with_orientation(orientation)?;
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn space(&self) -> &QuadraticSpace {
        &self.space
    }

    pub fn metric(&self) -> &[Vec<Scalar>] {
        self.space.metric()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `(negative, positive)` counts of the scalar product.
    pub fn signature(&self) -> (usize, usize) {
        self.space.signature()
    }

    pub fn jacobi_check(&self) -> Result<(), LieError> {
        self.algebra.jacobi_check()
    }

    /// Checks `B([e_i,e_j],e_k) = B(e_i,[e_j,e_k])` on all basis triples.
    pub fn invariance_check(&self) -> Result<(), LieError> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let left = self.algebra.bracket_basis(i, j);
                for k in 0..n {
                    let lhs = self.pair_basis(left, k);
                    let rhs = self.pair_basis(self.algebra.bracket_basis(j, k), i);
                    if lhs != rhs {
                        return Err(LieError::NotInvariant([i, j, k]));
                    }
                }
            }
        }
        Ok(())
    }

    fn pair_basis(&self, v: &[Scalar], k: usize) -> Scalar {
        let g = self.space.metric();
        v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(m, x)| x * &g[m][k]).sum()
    }

    pub fn pair(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        self.space.pair(x, y)
    }

    /// Orthogonal direct sum; the orientation is the product orientation.
    pub fn direct_sum(&self, other: &MetricLieAlgebra) -> MetricLieAlgebra {
        let space = self.space.direct_sum(&other.space);
        MetricLieAlgebra {
            name: format!("{}+{}", self.name, other.name),
            algebra: self.algebra.direct_sum(&other.algebra),
            space,
        }
    }

    /// `true` if `map` is a Lie algebra isomorphism onto `target` pulling its
    /// scalar product back to this one.
    pub fn is_isometric_isomorphism(&self, target: &MetricLieAlgebra, map: &[Vec<Scalar>]) -> bool {
        if self.dim() != target.dim() || !self.algebra.is_homomorphism(&target.algebra, map) {
            return false;
        }
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| (0..n).map(|r| map[r][j].clone()).collect()).collect();
        let det_ok = linalg::determinant(map).map(|d| !d.is_zero()).unwrap_or(false);
        det_ok
            && (0..n).all(|i| {
                (0..n).all(|j| target.pair(&cols[i], &cols[j]) == self.space.metric()[i][j])
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: i64) -> Scalar {
        Scalar::from(x)
    }

    pub(crate) fn so3() -> LieAlgebra {
        LieAlgebra::from_brackets(
            3,
            &[(0, 1, vec![(2, s(1))]), (1, 2, vec![(0, s(1))]), (2, 0, vec![(1, s(1))])],
        )
        .unwrap()
    }

    #[test]
    fn abelian_passes() {
        let g = LieAlgebra::abelian(4);
        assert!(g.jacobi_check().is_ok());
        assert!(g.is_abelian());
        assert_eq!(g.center().unwrap().len(), 4);
    }

    #[test]
    fn so3_jacobi_and_invariance() {
        let g = so3();
        assert!(g.jacobi_check().is_ok());
        let m = MetricLieAlgebra::new("so3", g.clone(), linalg::identity(3)).unwrap();
        assert!(m.invariance_check().is_ok());
        assert!(g.center().unwrap().is_empty());
        assert!(!g.is_solvable().unwrap());
    }

    #[test]
    fn non_invariant_metric_has_witness() {
        let metric = vec![vec![s(1), s(0), s(0)], vec![s(0), s(2), s(0)], vec![s(0), s(0), s(1)]];
        let m = MetricLieAlgebra::new("so3", so3(), metric).unwrap();
        assert!(matches!(m.invariance_check(), Err(LieError::NotInvariant(_))));
    }

    #[test]
    fn contradictory_brackets_rejected() {
        let r = LieAlgebra::from_brackets(2, &[(0, 1, vec![(0, s(1))]), (1, 0, vec![(0, s(1))])]);
        assert!(matches!(r, Err(LieError::NotAntisymmetric(1, 0))));
    }

    #[test]
    fn broken_jacobi_reports_triple() {
        let g = LieAlgebra::from_brackets(
            3,
            &[(0, 1, vec![(2, s(1))]), (1, 2, vec![(1, s(1))])],
        )
        .unwrap();
        assert_eq!(g.jacobi_check(), Err(LieError::Jacobi([0, 1, 2])));
    }
}
