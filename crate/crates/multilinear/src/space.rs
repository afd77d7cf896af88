use exactnum::linalg;
use exactnum::{Coeff, Scalar};

use crate::{FormError, KForm, MAX_DIM};

/// A real vector space with a constant nondegenerate symmetric bilinear form
/// on its frame, plus an orientation sign for the ordered basis.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticSpace {
    metric: Vec<Vec<Scalar>>,
    inverse: Vec<Vec<Scalar>>,
    orientation: i32,
    signature: (usize, usize),
    volume_factor: Scalar,
}

/// `(negative, positive, zero)` counts of a symmetric matrix, by congruence.
pub fn inertia(m: &[Vec<Scalar>]) -> (usize, usize, usize) {
    let n = m.len();
    let mut a = m.to_vec();
    let (mut neg, mut pos, mut zero) = (0, 0, 0);
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[k][c] += &v;
                }
                for row in a.iter_mut() {
                    let v = row[j].clone();
                    row[k] += &v;
                }
            } else {
                zero += 1;
                continue;
            }
        }
        let pivot = a[k][k].clone();
        if pivot.is_negative() {
            neg += 1;
        } else {
            pos += 1;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for c in 0..n {
                let t = &f * &a[k][c];
                a[i][c] -= &t;
            }
            for row in a.iter_mut() {
                let t = &f * &row[k];
                row[i] -= &t;
            }
        }
    }
    (neg, pos, zero)
}

impl QuadraticSpace {
    pub fn new(metric: Vec<Vec<Scalar>>, orientation: i32) -> Result<Self, FormError> {
        let n = metric.len();
        if n > MAX_DIM {
            return Err(FormError::DimensionTooLarge(n));
        }
        if orientation != 1 && orientation != -1 {
            return Err(FormError::BadOrientation(orientation));
        }
        for i in 0..n {
            if metric[i].len() != n {
                return Err(FormError::NotSymmetric(i, metric[i].len()));
            }
            for j in 0..i {
                if metric[i][j] != metric[j][i] {
                    return Err(FormError::NotSymmetric(i, j));
                }
            }
        }
        let inverse = linalg::inverse(&metric).map_err(|_| FormError::Degenerate)?;
        let det = linalg::determinant(&metric)?;
        let volume_factor = det
            .abs()
            .sqrt()
            .map_err(|_| FormError::IrrationalVolume(det.to_string()))?;
        let (neg, pos, zero) = inertia(&metric);
        if zero > 0 {
            return Err(FormError::Degenerate);
        }
        Ok(QuadraticSpace { metric, inverse, orientation, signature: (neg, pos), volume_factor })
    }

    /// Diagonal metric with the given entries, positively oriented.
    pub fn diagonal(entries: &[Scalar]) -> Result<Self, FormError> {
        let n = entries.len();
        let metric = (0..n)
            .map(|i| (0..n).map(|j| if i == j { entries[i].clone() } else { Scalar::zero() }).collect())
            .collect();
        QuadraticSpace::new(metric, 1)
    }

    pub fn euclidean(n: usize) -> Self {
        QuadraticSpace::diagonal(&vec![Scalar::one(); n]).expect("euclidean metric is valid")
    }

    /// `diag(-1, 1, …, 1)` in dimension `n`.
    pub fn minkowski(n: usize) -> Self {
        let mut d = vec![Scalar::one(); n];
        d[0] = Scalar::from(-1);
        QuadraticSpace::diagonal(&d).expect("minkowski metric is valid")
    }

    /// Diagonal metric with `t` leading `-1` entries followed by `s` ones.
    pub fn pseudo_euclidean(t: usize, s: usize) -> Self {
        let d: Vec<Scalar> = (0..t + s).map(|i| Scalar::from(if i < t { -1 } else { 1 })).collect();
        QuadraticSpace::diagonal(&d).expect("diagonal metric is valid")
    }

    /// Frame `(e_+, e_-, e_1, …, e_m)` with `g(e_+, e_-) = 1` and euclidean
    /// transverse block.
    pub fn lightcone(transverse: usize) -> Self {
        let n = transverse + 2;
        let mut metric = vec![vec![Scalar::zero(); n]; n];
        metric[0][1] = Scalar::one();
        metric[1][0] = Scalar::one();
        for (i, row) in metric.iter_mut().enumerate().skip(2) {
            row[i] = Scalar::one();
        }
        QuadraticSpace::new(metric, 1).expect("lightcone metric is valid")
    }

    pub fn with_orientation(mut self, orientation: i32) -> Result<Self, FormError> {
        if orientation != 1 && orientation != -1 {
            return Err(FormError::BadOrientation(orientation));
        }
        self.orientation = orientation;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.metric.len()
    }

    pub fn metric(&self) -> &[Vec<Scalar>] {
        &self.metric
    }

    pub fn inverse_metric(&self) -> &[Vec<Scalar>] {
        &self.inverse
    }

    /// `(t, s)`: number of timelike and spacelike directions.
    pub fn signature(&self) -> (usize, usize) {
        self.signature
    }

    pub fn orientation(&self) -> i32 {
        self.orientation
    }

    /// `√|det g|`.
    pub fn volume_factor(&self) -> &Scalar {
        &self.volume_factor
    }

    /// `g(u, v)` for vectors given by frame components.
    pub fn pair<C: Coeff>(&self, u: &[C], v: &[C]) -> C {
        let mut acc = C::zero();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if !self.metric[i][j].is_zero() && !vj.is_zero() {
                    acc = acc.plus(&ui.times(vj).scale(&self.metric[i][j]));
                }
            }
        }
        acc
    }

    /// The 1-form `g(v, ·)`.
    pub fn flat<C: Coeff>(&self, v: &[C]) -> KForm<C> {
        let n = self.dim();
        let comps = (0..n).map(|j| {
            let mut acc = C::zero();
            for (i, vi) in v.iter().enumerate() {
                if !self.metric[i][j].is_zero() && !vi.is_zero() {
                    acc = acc.plus(&vi.scale(&self.metric[i][j]));
                }
            }
            acc
        });
        KForm::one_form(comps.collect())
    }

    /// The vector dual to a 1-form.
    pub fn sharp<C: Coeff>(&self, a: &KForm<C>) -> Vec<C> {
        assert_eq!(a.degree(), 1, "sharp needs a 1-form");
        let n = self.dim();
        let comps = a.one_form_components();
        (0..n)
            .map(|i| {
                let mut acc = C::zero();
                for (j, aj) in comps.iter().enumerate() {
                    if !self.inverse[i][j].is_zero() && !aj.is_zero() {
                        acc = acc.plus(&aj.scale(&self.inverse[i][j]));
                    }
                }
                acc
            })
            .collect()
    }

    /// Oriented volume form `± √|g| e^0 ∧ ⋯ ∧ e^{n-1}`.
    pub fn volume_form<C: Coeff>(&self) -> KForm<C> {
        let n = self.dim();
        let factor = &self.volume_factor * &Scalar::from(self.orientation as i64);
        KForm::basis(n, &(0..n).collect::<Vec<_>>()).scale(&factor)
    }

    /// Orthogonal direct sum; the orientation is the product of the two.
    pub fn direct_sum(&self, other: &QuadraticSpace) -> QuadraticSpace {
        let n = self.dim() + other.dim();
        let mut metric = vec![vec![Scalar::zero(); n]; n];
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                metric[i][j] = self.metric[i][j].clone();
            }
        }
        let off = self.dim();
        for i in 0..other.dim() {
            for j in 0..other.dim() {
                metric[off + i][off + j] = other.metric[i][j].clone();
            }
        }
        QuadraticSpace::new(metric, self.orientation * other.orientation)
            .expect("direct sum of valid metrics is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signatures() {
        assert_eq!(QuadraticSpace::minkowski(11).signature(), (1, 10));
        assert_eq!(QuadraticSpace::lightcone(9).signature(), (1, 10));
        assert_eq!(QuadraticSpace::pseudo_euclidean(2, 4).signature(), (2, 4));
        assert_eq!(QuadraticSpace::euclidean(4).signature(), (0, 4));
    }

    #[test]
    fn rejects_bad_metrics() {
        let s = vec![vec![Scalar::one(), Scalar::one()], vec![Scalar::one(), Scalar::one()]];
        assert_eq!(QuadraticSpace::new(s, 1), Err(FormError::Degenerate));
        let a = vec![vec![Scalar::one(), Scalar::one()], vec![Scalar::zero(), Scalar::one()]];
        assert!(matches!(QuadraticSpace::new(a, 1), Err(FormError::NotSymmetric(..))));
        assert!(matches!(
            QuadraticSpace::diagonal(&vec![Scalar::one(); 14]),
            Err(FormError::DimensionTooLarge(14))
        ));
    }

    #[test]
    fn flat_and_sharp_are_inverse() {
        let g = QuadraticSpace::lightcone(2);
        let v: Vec<Scalar> = [1, 2, 3, 4].iter().map(|&x| Scalar::from(x)).collect();
        let b = g.flat(&v);
        assert_eq!(b.get(&[0]), Scalar::from(2));
        assert_eq!(g.sharp(&b), v);
    }
}
