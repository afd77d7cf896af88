use exactnum::{Coeff, Polynomial, Scalar};
use multilinear::{kulkarni_nomizu, BiSymTensor, KForm, QuadraticSpace, SymTensor};

use crate::{CoordinatePatch, GeometryError};

/// A space form known only through its dimension and scalar curvature,
/// described in an orthonormal frame. Lorentzian blocks put time first.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstCurvBlock {
    dim: usize,
    scalar_curvature: Scalar,
    lorentzian: bool,
}

impl ConstCurvBlock {
    pub fn new(dim: usize, scalar_curvature: Scalar, lorentzian: bool) -> Result<Self, GeometryError> {
        if dim == 0 || (dim == 1 && !scalar_curvature.is_zero()) {
            return Err(GeometryError::BadBlock { dim, curvature: scalar_curvature.to_string() });
        }
        Ok(ConstCurvBlock { dim, scalar_curvature, lorentzian })
    }

    /// Round `S^n`; needs `S > 0`.
    pub fn sphere(dim: usize, scalar_curvature: Scalar) -> Result<Self, GeometryError> {
        if !scalar_curvature.is_positive() {
            return Err(GeometryError::BadBlock { dim, curvature: scalar_curvature.to_string() });
        }
        ConstCurvBlock::new(dim, scalar_curvature, false)
    }

    /// `AdS_n`; needs `S < 0`.
    pub fn anti_de_sitter(dim: usize, scalar_curvature: Scalar) -> Result<Self, GeometryError> {
        if !scalar_curvature.is_negative() {
            return Err(GeometryError::BadBlock { dim, curvature: scalar_curvature.to_string() });
        }
        ConstCurvBlock::new(dim, scalar_curvature, true)
    }

    /// Flat `E^n` or `E^{1,n-1}`.
    pub fn flat(dim: usize, lorentzian: bool) -> Result<Self, GeometryError> {
        ConstCurvBlock::new(dim, Scalar::zero(), lorentzian)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn scalar_curvature(&self) -> &Scalar {
        &self.scalar_curvature
    }

    pub fn is_lorentzian(&self) -> bool {
        self.lorentzian
    }

    /// `K = S / (n(n−1))`.
    pub fn sectional_curvature(&self) -> Scalar {
        if self.dim < 2 {
            return Scalar::zero();
        }
        &self.scalar_curvature * &Scalar::ratio(1, (self.dim * (self.dim - 1)) as i64)
    }

    pub fn space(&self) -> QuadraticSpace {
        if self.lorentzian {
            QuadraticSpace::minkowski(self.dim)
        } else {
            QuadraticSpace::euclidean(self.dim)
        }
    }

    /// `K · ½ g⊙g`.
    pub fn riemann(&self) -> BiSymTensor<Scalar> {
        let g: SymTensor<Scalar> = self.space().metric().to_vec();
        kulkarni_nomizu(&g, &g).scale(&(&self.sectional_curvature() * &Scalar::ratio(1, 2)))
    }

    /// `(S/n) g`.
    pub fn ricci(&self) -> SymTensor<Scalar> {
        let f = &self.scalar_curvature * &Scalar::ratio(1, self.dim as i64);
        self.space().metric().iter().map(|r| r.iter().map(|x| x * &f).collect()).collect()
    }
}

/// One factor of a product: a space form, or a chart whose metric is
/// constant (flat factors written in coordinates).
#[derive(Clone, Debug, PartialEq)]
pub enum Factor {
    Block(ConstCurvBlock),
    Patch(CoordinatePatch),
}

impl Factor {
    pub fn dim(&self) -> usize {
        match self {
            Factor::Block(b) => b.dim(),
            Factor::Patch(p) => p.dim(),
        }
    }

    fn constant_metric(p: &CoordinatePatch) -> Result<Vec<Vec<Scalar>>, GeometryError> {
        p.metric()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.as_scalar().ok_or_else(|| GeometryError::Unsupported("product factor with non-constant metric".into())))
                    .collect()
            })
            .collect()
    }

    pub fn space(&self) -> Result<QuadraticSpace, GeometryError> {
        match self {
            Factor::Block(b) => Ok(b.space()),
            Factor::Patch(p) => Ok(QuadraticSpace::new(Factor::constant_metric(p)?, 1)?),
        }
    }

    fn riemann(&self) -> BiSymTensor<Scalar> {
        match self {
            Factor::Block(b) => b.riemann(),
            Factor::Patch(p) => BiSymTensor::zero(p.dim()),
        }
    }
}

/// An ordered product of factors; the frame is the concatenation of the
/// factor frames and `orientation` multiplies the induced volume form.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductGeometry {
    factors: Vec<Factor>,
    space: QuadraticSpace,
}

impl ProductGeometry {
    pub fn new(factors: Vec<Factor>, orientation: i32) -> Result<Self, GeometryError> {
        let spaces: Vec<QuadraticSpace> = factors.iter().map(Factor::space).collect::<Result<_, _>>()?;
        let lorentzian = spaces.iter().filter(|s| s.signature().0 > 0).count();
        let timelike: usize = spaces.iter().map(|s| s.signature().0).sum();
        if lorentzian != 1 || timelike != 1 {
            return Err(GeometryError::Causality(lorentzian.max(timelike)));
        }
        let mut space = spaces[0].clone();
        for s in &spaces[1..] {
            space = space.direct_sum(s);
        }
        let space = space.with_orientation(orientation)?;
        Ok(ProductGeometry { factors, space })
    }

    pub fn from_blocks(blocks: Vec<ConstCurvBlock>, orientation: i32) -> Result<Self, GeometryError> {
        ProductGeometry::new(blocks.into_iter().map(Factor::Block).collect(), orientation)
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn orientation(&self) -> i32 {
        self.space.orientation()
    }

    /// The frame metric with the product orientation.
    pub fn space(&self) -> &QuadraticSpace {
        &self.space
    }

    /// Frame indices occupied by factor `i`.
    pub fn block_range(&self, i: usize) -> std::ops::Range<usize> {
        let start: usize = self.factors[..i].iter().map(Factor::dim).sum();
        start..start + self.factors[i].dim()
    }

    /// The volume form of factor `i`, pulled back to the product.
    pub fn block_volume<C: Coeff>(&self, i: usize) -> Result<KForm<C>, GeometryError> {
        let range = self.block_range(i);
        let local: KForm<C> = self.factors[i].space()?.volume_form();
        let idx: Vec<usize> = range.collect();
        let c = local.get(&(0..idx.len()).collect::<Vec<_>>());
        Ok(KForm::from_terms(self.dim(), idx.len(), vec![(idx, c)]))
    }

    /// Block-diagonal Riemann tensor in the product frame.
    pub fn riemann(&self) -> BiSymTensor<Scalar> {
        product_riemann(self)
    }

    pub fn ricci(&self) -> SymTensor<Scalar> {
        crate::curvature::ricci_from(&self.riemann(), self.space.inverse_metric())
    }

    pub fn scalar_curvature(&self) -> Scalar {
        crate::curvature::scalar_curvature_from(&self.ricci(), self.space.inverse_metric())
    }

    /// Embeds the product as a coordinate-free curvature description usable
    /// with polynomial tensors.
    pub fn riemann_polynomial(&self) -> BiSymTensor<Polynomial> {
        self.riemann().map(|x| Polynomial::constant(x.clone()))
    }
}

pub fn product_riemann(g: &ProductGeometry) -> BiSymTensor<Scalar> {
    let n = g.dim();
    let mut out = BiSymTensor::zero(n);
    for (i, f) in g.factors.iter().enumerate() {
        let r = f.riemann();
        let off = g.block_range(i).start;
        let m = f.dim();
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    for d in 0..m {
                        let v = r.get(a, b, c, d);
                        if !v.is_zero() {
                            out.set(off + a, off + b, off + c, off + d, v.clone());
                        }
                    }
                }
            }
        }
    }
    out
}

/// The 2-forms `R(e_a, e_b, ·, ·)`, `a < b`, that are nonzero. On a locally
/// symmetric space they span the holonomy algebra.
pub fn curvature_operators(r: &BiSymTensor<Scalar>) -> Vec<KForm<Scalar>> {
    let n = r.dim();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let mut terms = Vec::new();
            for c in 0..n {
                for d in c + 1..n {
                    let v = r.get(a, b, c, d);
                    if !v.is_zero() {
                        terms.push((vec![c, d], v.clone()));
                    }
                }
            }
            if !terms.is_empty() {
                out.push(KForm::from_terms(n, 2, terms));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torsion::group_riemann;
    use liealg::{so3, MetricLieAlgebra};

    fn s(x: i64) -> Scalar {
        Scalar::from(x)
    }

    #[test]
    fn unit_two_sphere_has_gaussian_curvature_one() {
        let b = ConstCurvBlock::sphere(2, s(2)).unwrap();
        assert_eq!(b.sectional_curvature(), s(1));
        assert_eq!(b.riemann().get(0, 1, 1, 0), &s(1));
        assert_eq!(b.ricci()[0][0], s(1));
    }

    #[test]
    fn three_sphere_matches_group_curvature() {
        // so(3) with the unit metric: K = ¼|[X,Y]|² = ¼, so S = 6K
        let g = MetricLieAlgebra::new("so3", so3(), exactnum::linalg::identity(3)).unwrap();
        let block = ConstCurvBlock::sphere(3, Scalar::ratio(3, 2)).unwrap();
        assert_eq!(block.riemann(), group_riemann(&g));
    }

    #[test]
    fn freund_rubin_blocks() {
        let r = s(3);
        let ads = ConstCurvBlock::anti_de_sitter(7, &s(-7) * &r).unwrap();
        let sph = ConstCurvBlock::sphere(4, &s(8) * &r).unwrap();
        assert_eq!(ads.ricci()[1][1], -&r);
        assert_eq!(sph.ricci()[0][0], &s(2) * &r);
        let g = ProductGeometry::from_blocks(vec![ads, sph], 1).unwrap();
        assert_eq!(g.scalar_curvature(), r);
        let ric = g.ricci();
        assert_eq!(ric[0][0], r);
        assert_eq!(ric[8][8], &s(2) * &r);
        assert!(g.riemann().bianchi_violation().is_none());
        assert_eq!(g.block_volume::<Scalar>(1).unwrap(), KForm::basis(11, &[7, 8, 9, 10]));
    }

    #[test]
    fn flat_block_is_flat_and_causality_is_checked() {
        let g = ProductGeometry::from_blocks(vec![ConstCurvBlock::flat(4, true).unwrap()], 1).unwrap();
        assert!(g.riemann().is_zero());
        let two_times = vec![ConstCurvBlock::flat(2, true).unwrap(), ConstCurvBlock::flat(2, true).unwrap()];
        assert!(matches!(ProductGeometry::from_blocks(two_times, 1), Err(GeometryError::Causality(2))));
        assert!(ProductGeometry::from_blocks(vec![ConstCurvBlock::sphere(3, s(1)).unwrap()], 1).is_err());
        assert!(ConstCurvBlock::sphere(3, s(-1)).is_err());
        assert!(ConstCurvBlock::new(1, s(1), false).is_err());
    }

    #[test]
    fn curvature_operators_of_a_product() {
        let g = ProductGeometry::from_blocks(
            vec![ConstCurvBlock::anti_de_sitter(2, s(-2)).unwrap(), ConstCurvBlock::sphere(2, s(2)).unwrap()],
            1,
        )
        .unwrap();
        let ops = curvature_operators(&g.riemann());
        assert_eq!(ops.len(), 2);
        assert_eq!(ops[0].indexed_terms().next().unwrap().0, vec![0, 1]);
        assert_eq!(ops[1].indexed_terms().next().unwrap().0, vec![2, 3]);
    }
}
