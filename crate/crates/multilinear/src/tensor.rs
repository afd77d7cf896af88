use exactnum::Coeff;

/// Symmetric 2-tensor as a dense matrix of frame components.
pub type SymTensor<C> = Vec<Vec<C>>;

/// Four-index tensor with the algebraic symmetries of a curvature tensor
/// except the first Bianchi identity: skew in each pair, symmetric under
/// pair exchange. Stored densely.
#[derive(Clone, Debug, PartialEq)]
pub struct BiSymTensor<C> {
    dim: usize,
    comps: Vec<C>,
}

impl<C: Coeff> BiSymTensor<C> {
    pub fn zero(dim: usize) -> Self {
        BiSymTensor { dim, comps: vec![C::zero(); dim.pow(4)] }
    }

    /// Fills every component from `f`; the caller is responsible for the
    /// symmetries, which [`BiSymTensor::symmetry_violation`] can check.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize, usize) -> C) -> Self {
        let mut comps = Vec::with_capacity(dim.pow(4));
        for a in 0..dim {
            for b in 0..dim {
                for c in 0..dim {
                    for d in 0..dim {
                        comps.push(f(a, b, c, d));
                    }
                }
            }
        }
        BiSymTensor { dim, comps }
    }

    fn offset(&self, a: usize, b: usize, c: usize, d: usize) -> usize {
        ((a * self.dim + b) * self.dim + c) * self.dim + d
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, a: usize, b: usize, c: usize, d: usize) -> &C {
        &self.comps[self.offset(a, b, c, d)]
    }

    pub fn set(&mut self, a: usize, b: usize, c: usize, d: usize, value: C) {
        let o = self.offset(a, b, c, d);
        self.comps[o] = value;
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |x, y| x.plus(y))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |x, y| x.minus(y))
    }

    pub fn scale(&self, s: &exactnum::Scalar) -> Self {
        BiSymTensor { dim: self.dim, comps: self.comps.iter().map(|c| c.scale(s)).collect() }
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> BiSymTensor<D> {
        BiSymTensor { dim: self.dim, comps: self.comps.iter().map(f).collect() }
    }

    fn zip(&self, other: &Self, f: impl Fn(&C, &C) -> C) -> Self {
        assert_eq!(self.dim, other.dim, "tensor dimensions differ");
        BiSymTensor {
            dim: self.dim,
            comps: self.comps.iter().zip(&other.comps).map(|(x, y)| f(x, y)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    /// First nonzero component in lexicographic index order.
    pub fn first_nonzero(&self) -> Option<([usize; 4], C)> {
        let n = self.dim;
        self.comps.iter().enumerate().find(|(_, c)| !c.is_zero()).map(|(o, c)| {
            ([o / (n * n * n), (o / (n * n)) % n, (o / n) % n, o % n], c.clone())
        })
    }

    /// First index tuple at which a pair symmetry fails.
    pub fn symmetry_violation(&self) -> Option<[usize; 4]> {
        let n = self.dim;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let x = self.get(a, b, c, d);
                        if *x != self.get(b, a, c, d).negate()
                            || *x != self.get(a, b, d, c).negate()
                            || x != self.get(c, d, a, b)
                        {
                            return Some([a, b, c, d]);
                        }
                    }
                }
            }
        }
        None
    }

    /// First index tuple violating the first Bianchi identity.
    pub fn bianchi_violation(&self) -> Option<[usize; 4]> {
        let n = self.dim;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let s = self.get(a, b, c, d).plus(self.get(b, c, a, d)).plus(self.get(c, a, b, d));
                        if !s.is_zero() {
                            return Some([a, b, c, d]);
                        }
                    }
                }
            }
        }
        None
    }
}

/// Kulkarni–Nomizu product, normalized so that
/// `(h⊙k)(X,Y,Z,W) = h(X,W)k(Y,Z) + h(Y,Z)k(X,W) − h(X,Z)k(Y,W) − h(Y,W)k(X,Z)`.
///
/// With this sign the unit round sphere has curvature tensor `½ g⊙g` and
/// `(g⊙g)(X,Y,Y,X) = 2(g(X,X)g(Y,Y) − g(X,Y)²)`.
pub fn kulkarni_nomizu<C: Coeff>(h: &SymTensor<C>, k: &SymTensor<C>) -> BiSymTensor<C> {
    let n = h.len();
    assert_eq!(k.len(), n, "tensor dimensions differ");
    BiSymTensor::from_fn(n, |x, y, z, w| {
        h[x][w]
            .times(&k[y][z])
            .plus(&h[y][z].times(&k[x][w]))
            .minus(&h[x][z].times(&k[y][w]))
            .minus(&h[y][w].times(&k[x][z]))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactnum::Scalar;

    fn diag(entries: &[i64]) -> SymTensor<Scalar> {
        let n = entries.len();
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { Scalar::from(entries[i]) } else { Scalar::zero() }).collect())
            .collect()
    }

    #[test]
    fn plane_value() {
        let g = diag(&[1, 1]);
        let gg = kulkarni_nomizu(&g, &g);
        assert_eq!(*gg.get(0, 1, 1, 0), Scalar::from(2));
        let k = diag(&[3, 5]);
        assert_eq!(*kulkarni_nomizu(&g, &k).get(0, 1, 1, 0), Scalar::from(8));
    }

    #[test]
    fn symmetric_and_bianchi() {
        let g = diag(&[-1, 1, 1]);
        let mut k = diag(&[2, 3, 7]);
        k[0][1] = Scalar::from(4);
        k[1][0] = Scalar::from(4);
        let t = kulkarni_nomizu(&g, &k);
        assert_eq!(t.symmetry_violation(), None);
        assert_eq!(t.bianchi_violation(), None);
    }
}
