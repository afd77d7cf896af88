use std::sync::Arc;

use exactnum::{Coeff, Polynomial, Scalar};
use liealg::CwData;

use crate::GeometryError;

/// `∂p/∂var`, zero when `p` does not mention `var`.
pub(crate) fn partial(p: &Polynomial, var: &str) -> Polynomial {
    if p.is_zero() {
        return Polynomial::zero();
    }
    p.partial(var).unwrap_or_else(|_| Polynomial::zero())
}

/// A coordinate chart `(x^0, …, x^{n-1})` with polynomial metric components
/// and a polynomial inverse.
#[derive(Clone, Debug, PartialEq)]
pub struct CoordinatePatch {
    coords: Arc<Vec<String>>,
    metric: Vec<Vec<Polynomial>>,
    inverse: Vec<Vec<Polynomial>>,
}

/// Gauss–Jordan inversion that only ever divides by constant pivots.
pub(crate) fn invert(m: &[Vec<Polynomial>]) -> Result<Vec<Vec<Polynomial>>, GeometryError> {
    let n = m.len();
    let mut a: Vec<Vec<Polynomial>> = m.to_vec();
    let mut inv: Vec<Vec<Polynomial>> = exactnum::linalg::identity(n);
    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&r| a[r][col].as_scalar().is_some_and(|s| !s.is_zero()))
            .ok_or(GeometryError::NoPolynomialInverse(col))?;
        a.swap(col, pivot_row);
        inv.swap(col, pivot_row);
        let p = a[col][col].as_scalar().expect("constant pivot").inv()?;
        for j in 0..n {
            a[col][j] = a[col][j].scale(&p);
            inv[col][j] = inv[col][j].scale(&p);
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                if !a[col][j].is_zero() {
                    a[r][j] = a[r][j].minus(&f.times(&a[col][j]));
                }
                if !inv[col][j].is_zero() {
                    inv[r][j] = inv[r][j].minus(&f.times(&inv[col][j]));
                }
            }
        }
    }
    Ok(inv)
}

impl CoordinatePatch {
    pub fn new(coords: &[&str], metric: Vec<Vec<Polynomial>>) -> Result<Self, GeometryError> {
        let n = coords.len();
        let vars: Arc<Vec<String>> = Arc::new(coords.iter().map(|c| c.to_string()).collect());
        if metric.len() != n {
            return Err(GeometryError::Dimension { expected: n, found: metric.len() });
        }
        let mut aligned = Vec::with_capacity(n);
        for row in &metric {
            if row.len() != n {
                return Err(GeometryError::Dimension { expected: n, found: row.len() });
            }
            let r: Result<Vec<Polynomial>, GeometryError> = row
                .iter()
                .map(|p| {
                    p.align(&vars).map_err(|e| match e {
                        exactnum::NumError::UnknownVariable(v) => GeometryError::UnknownCoordinate(v),
                        other => other.into(),
                    })
                })
                .collect();
            aligned.push(r?);
        }
        for i in 0..n {
            for j in 0..i {
                if aligned[i][j] != aligned[j][i] {
                    return Err(GeometryError::NotSymmetric(i, j));
                }
            }
        }
        let inverse = invert(&aligned)?
            .into_iter()
            .map(|row| row.into_iter().map(|p| p.align(&vars).expect("inverse stays in chart")).collect())
            .collect();
        Ok(CoordinatePatch { coords: vars, metric: aligned, inverse })
    }

    /// Constant metric in the given coordinates.
    pub fn constant(coords: &[&str], metric: &[Vec<Scalar>]) -> Result<Self, GeometryError> {
        let m = metric.iter().map(|r| r.iter().map(|s| Polynomial::constant(s.clone())).collect()).collect();
        CoordinatePatch::new(coords, m)
    }

    /// `E^{1,n-1}` in coordinates `t, x1, …`.
    pub fn minkowski(n: usize) -> Self {
        let names: Vec<String> = std::iter::once("t".to_string()).chain((1..n).map(|i| format!("x{i}"))).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let mut m = vec![vec![Scalar::zero(); n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Scalar::from(if i == 0 { -1 } else { 1 });
        }
        CoordinatePatch::constant(&refs, &m).expect("minkowski metric is invertible")
    }

    /// `2 dx⁺dx⁻ + (Σ A_ij xⁱxʲ)(dx⁻)² + Σ (dxⁱ)²` in coordinates
    /// `x+, x-, x1, …, xm`.
    pub fn cahen_wallach(data: &CwData) -> Self {
        let a = data.matrix();
        let m = a.len();
        let names: Vec<String> = ["x+".to_string(), "x-".to_string()]
            .into_iter()
            .chain((1..=m).map(|i| format!("x{i}")))
            .collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let n = m + 2;
        let vars: Arc<Vec<String>> = Arc::new(names.clone());
        let mut terms = Vec::new();
        for i in 0..m {
            for j in 0..m {
                if a[i][j].is_zero() {
                    continue;
                }
                let mut e = vec![0u32; n];
                e[2 + i] += 1;
                e[2 + j] += 1;
                terms.push((e, a[i][j].clone()));
            }
        }
        let gmm = Polynomial::from_terms(vars, terms);
        let mut metric = vec![vec![Polynomial::zero(); n]; n];
        metric[0][1] = Polynomial::one();
        metric[1][0] = Polynomial::one();
        metric[1][1] = gmm;
        for (i, row) in metric.iter_mut().enumerate().skip(2) {
            row[i] = Polynomial::one();
        }
        CoordinatePatch::new(&refs, metric).expect("Cahen-Wallach metric has a polynomial inverse")
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &Arc<Vec<String>> {
        &self.coords
    }

    pub fn coordinate_index(&self, name: &str) -> Result<usize, GeometryError> {
        self.coords.iter().position(|c| c == name).ok_or_else(|| GeometryError::UnknownCoordinate(name.to_string()))
    }

    pub fn metric(&self) -> &[Vec<Polynomial>] {
        &self.metric
    }

    pub fn inverse(&self) -> &[Vec<Polynomial>] {
        &self.inverse
    }

    /// The coordinate function `x^i` as a polynomial.
    pub fn coordinate(&self, i: usize) -> Polynomial {
        let mut e = vec![0u32; self.dim()];
        e[i] = 1;
        Polynomial::from_terms(self.coords.clone(), [(e, Scalar::one())])
    }

    /// Brings a polynomial onto this chart's variable list.
    pub fn lift(&self, p: &Polynomial) -> Result<Polynomial, GeometryError> {
        p.align(&self.coords).map_err(|_| GeometryError::Unsupported(format!("polynomial {p} uses foreign variables")))
    }

    /// `∂_i p`.
    pub fn partial(&self, p: &Polynomial, i: usize) -> Polynomial {
        partial(p, &self.coords[i])
    }

    /// `g_{μν} v^ν`.
    pub fn lower(&self, v: &[Polynomial]) -> Vec<Polynomial> {
        contract(&self.metric, v)
    }

    /// `g^{μν} a_ν`.
    pub fn raise(&self, a: &[Polynomial]) -> Vec<Polynomial> {
        contract(&self.inverse, a)
    }

    /// `Σ g_{μν} g^{νρ} − δ_μ^ρ`, which must vanish.
    pub fn inverse_defect(&self) -> Option<(usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for k in 0..n {
                let mut acc = Polynomial::zero();
                for j in 0..n {
                    if !self.metric[i][j].is_zero() && !self.inverse[j][k].is_zero() {
                        acc = acc.plus(&self.metric[i][j].times(&self.inverse[j][k]));
                    }
                }
                let expected = if i == k { Polynomial::one() } else { Polynomial::zero() };
                if acc != expected {
                    return Some((i, k));
                }
            }
        }
        None
    }

    /// Evaluates the metric at a point.
    pub fn metric_at(&self, point: &[Scalar]) -> Vec<Vec<Scalar>> {
        self.metric.iter().map(|r| r.iter().map(|p| eval(p, &self.coords, point)).collect()).collect()
    }
}

pub(crate) fn contract(m: &[Vec<Polynomial>], v: &[Polynomial]) -> Vec<Polynomial> {
    m.iter()
        .map(|row| {
            row.iter().zip(v).filter(|(a, b)| !a.is_zero() && !b.is_zero()).fold(Polynomial::zero(), |acc, (a, b)| {
                acc.plus(&a.times(b))
            })
        })
        .collect()
}

/// Evaluates `p` at `point`, given in the order of `coords`.
pub fn eval(p: &Polynomial, coords: &Arc<Vec<String>>, point: &[Scalar]) -> Scalar {
    if p.is_zero() {
        return Scalar::zero();
    }
    p.align(coords).map(|q| q.evaluate(point)).unwrap_or_else(|_| p.constant_term())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cw_inverse_is_polynomial() {
        let data = CwData::diagonal(&[Scalar::from(-4), Scalar::from(-1)]);
        let p = CoordinatePatch::cahen_wallach(&data);
        assert_eq!(p.dim(), 4);
        assert!(p.inverse_defect().is_none());
        // g^{++} = −g₋₋
        assert_eq!(p.inverse()[0][0], p.metric()[1][1].negate());
        assert_eq!(p.inverse()[0][1], Polynomial::one());
        assert!(p.inverse()[1][1].is_zero());
    }

    #[test]
    fn rejects_non_polynomial_inverse() {
        let vars = ["u", "v"];
        let u = Polynomial::variable(&vars, "u").unwrap();
        let m = vec![vec![u.clone(), Polynomial::zero()], vec![Polynomial::zero(), Polynomial::one()]];
        assert!(matches!(CoordinatePatch::new(&vars, m), Err(GeometryError::NoPolynomialInverse(0))));
    }

    #[test]
    fn rejects_asymmetric_metric_and_foreign_variables() {
        let vars = ["u", "v"];
        let u = Polynomial::variable(&vars, "u").unwrap();
        let m = vec![vec![Polynomial::one(), u], vec![Polynomial::zero(), Polynomial::one()]];
        assert!(matches!(CoordinatePatch::new(&vars, m), Err(GeometryError::NotSymmetric(1, 0))));
        let w = Polynomial::variable(&["w"], "w").unwrap();
        let m = vec![vec![Polynomial::one(), Polynomial::zero()], vec![Polynomial::zero(), w]];
        assert!(matches!(CoordinatePatch::new(&vars, m), Err(GeometryError::UnknownCoordinate(_))));
    }
}
